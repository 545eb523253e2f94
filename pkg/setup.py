#!/usr/bin/env python

import sys

try:
    from setuptools import find_packages, setup
except ImportError:
    from distutils.core import find_packages, setup

try:
    from setuptools.command.sdist import sdist
except ImportError:
    from distutils.command.sdist import sdist

# Change PYTHONPATH to include ixg so that we can get the version.
sys.path.insert(0, ".")

try:
    from ixg.version import get_txt_version, get_version
except ImportError:
    # If we can't import IxG (numpy and friends missing) then we can't
    # generate the version from git, but can still read the version file.
    def get_version(_=None):
        return get_txt_version()

    def get_txt_version():
        try:
            with open("version.txt", "r") as fp:
                return fp.read().strip()
        except IOError:
            return None


__version__ = get_txt_version()


class SDistCommand(sdist):
    """Custom handler for the sdist command."""

    def run(self):
        global __version__
        __version__ = get_version(False)
        with open("version.txt", "w") as fd:
            fd.write(__version__)

        sdist.run(self)


setup(name="ixg",
      version=__version__,
      description="IxG and IxG* planners for graphs of convex sets",
      long_description=(
          "IxG finds smooth, collision-free trajectories through a graph of "
          "convex sets by interleaving best-first search with convex "
          "trajectory optimization over partial set sequences, guided by a "
          "precomputed lower bound graph."),
      license="Apache 2.0",
      author="The IxG Authors",
      packages=find_packages(exclude=["ixg_tests*", "sample_projects*"]),
      package_dir={"ixg": "ixg"},
      python_requires=">=3.8",
      cmdclass={
          "sdist": SDistCommand},
      entry_points={
          "console_scripts": ["ixg = ixg.cli:main"]},
      install_requires=[
          "cvxpy >= 1.3",
          "matplotlib >= 3.3",
          "numpy >= 1.20",
          "python-dateutil > 2",
          "pytz >= 2011",
          "scipy >= 1.6"],
      extras_require={
          "scs": ["scs"],
          "ecos": ["ecos"]})
