"""Run the symmetry scans for every family and write one JSON report each.

    python3 scripts/run_scans.py --max-size 7 --workers 4 --out results/
"""
import argparse
import json
from pathlib import Path

from qsymlab.families import FAMILIES
from qsymlab.verify import check_corollaries, scan_theorem


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--families", nargs="*", default=list(FAMILIES))
    p.add_argument("--out", type=Path, default=None, help="directory for JSON reports")
    args = p.parse_args()

    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
    total = 0
    for name in args.families:
        report = scan_theorem(name, args.max_size, workers=args.workers)
        forms = check_corollaries(name, args.max_size)
        total += len(report.mismatches) + len(forms)
        print(
            f"{name:5s} shapes={report.shapes:5d} mismatches={len(report.mismatches)} "
            f"closed-form failures={len(forms)} ({report.ms} ms)"
        )
        if args.out:
            data = report.to_json() | {"closed_form_failures": forms}
            (args.out / f"{name}_{args.max_size}.json").write_text(json.dumps(data, indent=1) + "\n")
    raise SystemExit(1 if total else 0)


if __name__ == "__main__":
    main()
