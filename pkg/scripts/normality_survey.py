#!/usr/bin/env python3
"""Survey all shapes for normality on a bounded domain."""

import argparse
import json

from fracterm.shapes import SHAPE_IDS, instance_to_json, normality_report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bound", type=int, default=50)
    args = parser.parse_args()

    for shape_id in SHAPE_IDS:
        report = normality_report(shape_id, args.bound)
        if report.normal:
            print(f"{shape_id:14} normal (exhausted bound {args.bound})")
        else:
            a, b = (json.dumps(instance_to_json(w)["value"]) for w in report.witness)
            print(f"{shape_id:14} subnormal: {a} and {b} name the same number")


if __name__ == "__main__":
    main()
