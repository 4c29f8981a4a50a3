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

"""Command line of the benchmark harness.

``bench run`` runs a suite and writes its CSV table and JSON summary,
``bench compare`` tests whether a metric is larger in one result file than in
another and ``bench render`` draws an episode trace as SVG.
"""

import argparse
import json
import logging
import sys

import pandas as pd

from ..core.geometry import EnvMap
from ..exceptions import ConfigurationError, NotRegistered, ParameterError
from .config import BenchConfig
from .render import render_trajectory
from .stats import two_proportion_greater, welch_greater
from .suite import run_suite

logger = logging.getLogger(__name__)

# flag name -> BenchConfig field, for flags that override the config file
RUN_OVERRIDES = {
    "env": "env",
    "planner": "planner",
    "ablation": "ablation",
    "seeds": "seeds",
    "episodes": "episodes",
    "base_seed": "base_seed",
    "map": "map",
    "out": "out",
    "summary": "summary",
    "trace": "trace",
    "jobs": "n_jobs",
}


def build_parser():
    parser = argparse.ArgumentParser(prog="bench", description="Belief-space planning benchmarks")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run a suite of episodes")
    run.add_argument("--config", help="JSON file with the run configuration")
    run.add_argument("--env", help="floor, lightdark or tiger")
    run.add_argument("--planner", help="pft, straight or random")
    run.add_argument("--ablation", help="none, traps or mismatch")
    run.add_argument("--seeds", type=int, help="number of seeds")
    run.add_argument("--episodes", type=int, help="episodes per seed")
    run.add_argument("--base-seed", type=int, help="first seed of the ladder")
    run.add_argument("--map", help="JSON map replacing the default one")
    run.add_argument("--out", help="per-episode CSV output")
    run.add_argument("--summary", help="JSON summary output")
    run.add_argument("--trace", help="directory receiving one JSON trace per episode")
    run.add_argument("--tree-diag", action="store_true", help="keep planner diagnostics in traces (needs --trace)")
    run.add_argument("--full", action="store_true", help="published evaluation sizes")
    run.add_argument("--no-timing", action="store_true", help="record zero wall times")
    run.add_argument("--jobs", type=int, help="parallel workers")

    compare = commands.add_parser("compare", help="one-sided comparison of two result files")
    compare.add_argument("first", help="CSV expected to be better")
    compare.add_argument("second", help="CSV to compare against")
    compare.add_argument("--metric", default="reward", help="CSV column to compare")

    render = commands.add_parser("render", help="draw an episode trace")
    render.add_argument("trace", help="JSON trace written by bench run --trace")
    render.add_argument("--out", required=True, help="SVG output")
    render.add_argument("--steps", type=int, nargs="*", default=[0], help="steps whose particles are drawn")
    return parser


def run_config(args):
    """Configuration of ``bench run``: file values overridden by explicit flags."""
    data = {}
    if args.config is not None:
        data = BenchConfig.from_json(args.config).to_dict()
    for flag, key in RUN_OVERRIDES.items():
        value = getattr(args, flag)
        if value is not None:
            data[key] = value
    if args.tree_diag:
        data["tree_diag"] = True
    if args.no_timing:
        data["record_timing"] = False
    config = BenchConfig.from_dict(data)
    if args.full:
        config = config.full_size()
    return config


def command_run(args):
    result = run_suite(run_config(args))
    result.write()
    result.summary.print_stats()
    return 0


def command_compare(args):
    first = pd.read_csv(args.first)
    second = pd.read_csv(args.second)
    metric = args.metric
    for table, path in ((first, args.first), (second, args.second)):
        if metric not in table.columns:
            raise ConfigurationError(path, f"no column {metric!r}")
    a = first[metric].astype(float)
    b = second[metric].astype(float)
    if metric == "success":
        p = two_proportion_greater(a.sum(), len(a), b.sum(), len(b))
    else:
        p = welch_greater(a.dropna(), b.dropna())
    print(f"{metric}: {a.mean():.4g} vs {b.mean():.4g}, one-sided p = {p:.4g}")
    return 0


def command_render(args):
    try:
        with open(args.trace, encoding="utf-8") as f:
            trace = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(args.trace, f"cannot read trace ({e})")
    if trace.get("map") is None:
        raise ConfigurationError(args.trace, "trace has no map")
    svg = render_trajectory(trace, EnvMap.from_dict(trace["map"]), args.steps)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(svg)
    logger.info("Wrote %s", args.out)
    return 0


COMMANDS = {"run": command_run, "compare": command_compare, "render": command_render}


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (ParameterError, NotRegistered) as e:
        print(f"bench: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
