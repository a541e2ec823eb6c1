import os
from json_database import JsonStorageXDG
from ovos_utils.log import LOG
from os.path import exists

DEFAULT_CONFIGURATION = {
    # maximum number of caret shapes enumerate_carets may return
    'enumeration_cap': 10000,
    'representability': {
        # iterations of A^N p before a certificate is declared inconclusive
        'max_n': 256
    },
    'treepairs': {
        # deepest leaf partition_to_tree may create
        'depth_bound': 16,
        # caret insertions explored while composing tree pairs
        'refinement_budget': 10000
    },
    'plmaps': {
        # slopes are searched as beta^k with |k| <= slope_window
        'slope_window': 64
    },
    'verify': {
        'parallel': False,
        'workers': 4
    },
    'log_level': 'INFO'
}


def _merge_defaults(base, default=None):
    """
        Recursively merging configuration dictionaries.

        Args:
            base:  Target for merge
            default: Dictionary to merge into base if key not present
    """
    default = default or DEFAULT_CONFIGURATION
    for k, dv in default.items():
        bv = base.get(k)
        if isinstance(dv, dict) and isinstance(bv, dict):
            _merge_defaults(bv, dv)
        elif k not in base:
            base[k] = dv
    return base


def get_max_n(config=None):
    """Iteration bound for the obstruction engine.

    BETAFORGE_MAXN in the environment wins over the stored configuration.
    """
    config = config or CONFIGURATION
    value = os.environ.get("BETAFORGE_MAXN")
    if value:
        try:
            max_n = int(value)
            if max_n >= 1:
                return max_n
        except ValueError:
            pass
        LOG.warning("ignoring malformed BETAFORGE_MAXN=" + value)
    return config["representability"]["max_n"]


CONFIGURATION = JsonStorageXDG("betaforge")
CONFIGURATION = _merge_defaults(CONFIGURATION)
if not exists(CONFIGURATION.path):
    try:
        CONFIGURATION.store()
    except OSError as e:
        LOG.warning("could not store configuration: {}".format(e))
