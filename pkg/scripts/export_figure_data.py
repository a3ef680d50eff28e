"""
Write the data behind the limiting-distribution and ratio-limit plots as CSV.

    python scripts/export_figure_data.py --out figure_data
"""
import argparse
import logging
import sys
from pathlib import Path

project_root = Path(__file__).resolve().parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from src.analysis.distribution_k1 import limit_dist
from src.commands.envelope import OutputEnvelope
from src.series.closed_forms import ratio_limit

logger = logging.getLogger("export_figure_data")

DIST_LEVELS = (7, 10, 14)


def limit_distribution_csv(t: int) -> str:
    table = limit_dist(t)
    return OutputEnvelope(
        command="dist",
        parameters={"t": t, "limit": True},
        columns=["s", "J", "mass_num", "mass_den", "mass_float"],
        rows=table.rows(),
    ).to_csv()


def ratio_limits_csv(k: int, t_max: int) -> str:
    rows = []
    for t in range(t_max + 1):
        limit = ratio_limit(k, t)
        rows.append({"t": t, "num": limit.numerator, "den": limit.denominator, "float": float(limit)})
    return OutputEnvelope(
        command="ratio",
        parameters={"k": k, "t_max": t_max},
        columns=["t", "num", "den", "float"],
        rows=rows,
    ).to_csv()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Export plot data as CSV")
    parser.add_argument("--out", type=Path, default=Path("figure_data"))
    parser.add_argument("--ratio-k", type=int, default=10)
    parser.add_argument("--ratio-tmax", type=int, default=100)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s", stream=sys.stderr)

    args.out.mkdir(parents=True, exist_ok=True)
    for t in DIST_LEVELS:
        path = args.out / f"limit_dist_t{t}.csv"
        path.write_text(limit_distribution_csv(t), encoding="utf-8")
        logger.info("wrote %s", path)
    path = args.out / f"ratio_limit_k{args.ratio_k}.csv"
    path.write_text(ratio_limits_csv(args.ratio_k, args.ratio_tmax), encoding="utf-8")
    logger.info("wrote %s", path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
