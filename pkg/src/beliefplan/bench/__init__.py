# Copyright © 2023 The beliefplan developers
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
# ==============================================================================

from .config import SCENARIOS, BenchConfig
from .episode import EpisodeRecord, StepRecord, run_episode
from .render import render_trajectory, trajectory_figure
from .stats import chi_square_uniform, two_proportion_greater, welch_greater
from .suite import RunSummary, SuiteResult, run_suite, summarize
