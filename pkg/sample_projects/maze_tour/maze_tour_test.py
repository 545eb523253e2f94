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
IxG test suite.
"""

import os
import shutil
import tempfile

from ixg_tests import testlib


class MazeTourTest(testlib.IxgTestCase):
    def testFullRun(self):
        out_dir = tempfile.mkdtemp()
        try:
            cmd = os.path.join("sample_projects", "maze_tour", "maze_tour.py")
            stdout, _ = self.assertPythonScript(cmd, [out_dir])
            self.assertIn(b"cost", stdout)
            self.assertEqual(len(os.listdir(out_dir)), 4)
        finally:
            shutil.rmtree(out_dir)
