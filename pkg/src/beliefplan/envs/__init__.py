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

from .floor import (
    FloorConfig,
    FloorEnvironment,
    radar_density,
    radar_log_density,
    radar_observe,
    radar_propose,
)
from .lightdark import (
    LightDarkConfig,
    LightDarkEnvironment,
    lightdark_density,
    lightdark_log_density,
    lightdark_observe,
    lightdark_propose,
    region_of,
    spawn_test_traps,
)
from .maps import floor_map_dict, lightdark_map_dict, load_map
from .tiger import TigerConfig, TigerEnvironment, TigerSolver, tiger_fixture, tiger_posterior
