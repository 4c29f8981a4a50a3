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

""" Exceptions for beliefplan """


class NotRegistered(Exception):
    """Environment or planner is not known to beliefplan"""

    def __init__(self, kind, name):
        super().__init__(f"No {kind} named {name!r} is registered with beliefplan")


class ParameterError(Exception):
    """Wrong parameter to a function"""

    def __init__(self, message):
        super().__init__(message)


class ConfigurationError(ParameterError):
    """Invalid environment, map or benchmark configuration"""

    def __init__(self, source, reason):
        if not isinstance(source, str):
            source = type(source).__name__
        super().__init__(f"Invalid configuration for {source}: {reason}")
