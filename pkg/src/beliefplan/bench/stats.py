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

"""One-sided comparisons used to judge ablations"""

import math

import numpy as np
from scipy import stats


def welch_greater(a, b):
    """p-value of Welch's t-test for ``mean(a) > mean(b)``."""
    return float(stats.ttest_ind(a, b, equal_var=False, alternative="greater").pvalue)


def two_proportion_greater(k1, n1, k2, n2):
    """p-value of the pooled z-test for ``k1 / n1 > k2 / n2``."""
    p1, p2 = k1 / n1, k2 / n2
    pooled = (k1 + k2) / (n1 + n2)
    se = math.sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2))
    if se == 0.0:
        return 1.0
    return float(stats.norm.sf((p1 - p2) / se))


def chi_square_uniform(samples, low, high, bins=4):
    """p-value of the chi-square test that ``samples`` are uniform on ``[low, high]``."""
    counts, _ = np.histogram(samples, bins=bins, range=(low, high))
    return float(stats.chisquare(counts).pvalue)
