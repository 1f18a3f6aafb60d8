# Core Library modules
import sys

# Third party modules
from setuptools import setup

packagedata = {
    "PyCuboid": [
        "data/*.json",
        "data/appendix/*",
        "data/configurations/*",
        "test/*",
        "test/test_data/*",
    ]
}

install_requires = ["numpy", "scipy>=1.9", "networkx", "python-sat"]

if sys.version_info < (3, 7):
    sys.exit("PyCuboid needs Python 3.7 or newer.")

setup(
    package_data=packagedata,
    package_dir={"PyCuboid": "PyCuboid"},
    install_requires=install_requires,
    entry_points={"console_scripts": ["pycuboid = PyCuboid.cli:main"]},
)
