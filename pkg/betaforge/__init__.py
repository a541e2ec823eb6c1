from betaforge.exactnum import FieldElem, RatPoly, RootInterval, approx, \
    isolate_positive_root, sign_at_root, sturm_count
from betaforge.subdivision import BetaContext, CaretShape, \
    SubdivisionPolynomial, enumerate_carets, even_root_exclusion, \
    exponent_gcd, quadratic_tree_pair_defined, rational_root, \
    sqrt_membership_quadratic, validate_subdivision
from betaforge.representability import Certificate, SubstitutionMatrix, \
    apply, boolean_cycle, build_matrix, decide_nonneg, matrix_power, \
    verify_certificate
from betaforge.plmaps import PLMap, Partition, PartitionPair, compose, \
    counterexample_map, from_partition_pair, ftau_generator, invert, \
    validate_membership
from betaforge.treepairs import TreePair, compose_pairs, equivalent, \
    leaf_depths, partition_to_tree, power_map_down, power_map_up, reduce, \
    tree_to_partition, treepair_to_plmap
from betaforge.treepairs.presentation import check_ftau_relations, \
    emit_presentation
