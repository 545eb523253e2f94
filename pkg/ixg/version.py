# IxG graph-of-convex-sets planner
#
# Copyright 2026 The IxG Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
IxG versioning scheme.

Releases are MAJOR.MINOR. Development builds append the number of commits
since the release tag: MAJOR.MINOR.devN.
"""

import logging
import re
import subprocess

LOG = logging.getLogger(__name__)

MAJOR = 0
MINOR = 3

ANCHOR_TAG = "v%d.%d" % (MAJOR, MINOR)


def git_commits_since_tag(tag):
    try:
        p = subprocess.Popen(
            ["git", "log", "%s..HEAD" % tag, "--oneline"],
            stdout=subprocess.PIPE, stderr=subprocess.PIPE, shell=False)
        out, err = p.communicate()
    except OSError as e:
        LOG.warning("Cannot run git: %s", e)
        return None

    if p.returncode != 0:
        LOG.warning("git log failed with %r", err)
        return None

    return out.splitlines()


def git_dev_version():
    commits = git_commits_since_tag(ANCHOR_TAG)
    if commits is None:
        return None

    return "%d.%d.dev%d" % (MAJOR, MINOR, len(commits))


def get_pkg_version():
    """Get version string by parsing PKG-INFO."""
    try:
        with open("PKG-INFO", "r") as fp:
            rgx = re.compile(r"Version: (\S+)")
            for line in fp.readlines():
                match = rgx.match(line)
                if match:
                    return match.group(1)
    except IOError:
        return None


def get_txt_version():
    """Get version string from version.txt."""
    try:
        with open("version.txt", "r") as fp:
            return fp.read().strip()
    except IOError:
        return None


def get_version(dev_version=False):
    """Generates a version string.

    Arguments:
        dev_version: Generate a development version from git commits.

    Examples:
        0.3
        0.3.dev12 # If 'dev_version' was passed.
    """
    if dev_version:
        version = git_dev_version()
        if not version:
            raise RuntimeError("Could not generate dev version from git.")

        return version

    return "%d.%d" % (MAJOR, MINOR)
