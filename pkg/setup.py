from setuptools import setup

setup(
    name='betaforge',
    version='0.1.0',
    packages=['betaforge',
              'betaforge.configuration',
              'betaforge.treepairs'],
    install_requires=["ovos_utils",
                      "json_database>=0.1.3",
                      "pyee",
                      "sympy>=1.7"],
    extras_require={
        'test': ["pytest", "hypothesis"]
    },
    include_package_data=True,
    license='Apache2',
    description='Exact arithmetic, tree pairs and representability '
                'certificates for groups F_beta',
    entry_points={
        'console_scripts': [
            'betaforge=betaforge.__main__:main'
        ]
    }
)
