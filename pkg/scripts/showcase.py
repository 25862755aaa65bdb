#!/usr/bin/env python3
"""Walk through the flagship instances: classification reports for the small
named graphs, one axis computation, and a full stabilizer certificate."""

from pathlib import Path

from gpkit.cli import CommandRequest, run

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

DEMOS = [
    ("two non-adjacent vertices, orders 2 and 3",
     CommandRequest("classify", str(FIXTURES / "fp23.graph"))),
    ("4-cycle, all order 2",
     CommandRequest("classify", str(FIXTURES / "c4.graph"))),
    ("single edge, two symmetric groups on 3 letters",
     CommandRequest("classify", str(FIXTURES / "k2s3.graph"))),
    ("5-cycle, all order 2",
     CommandRequest("classify", str(FIXTURES / "c5.graph"))),
    ("axis of a*c inside the path a-b-c",
     CommandRequest("tree", str(FIXTURES / "p3.graph"), u="a", v="c",
                    axis="a[1]*b[1]*c[1]")),
    ("stabilizer certificate for the order-2 * order-3 free product",
     CommandRequest("tree", str(FIXTURES / "fp23.graph"), u="a", v="b",
                    wpd=True, radius=4)),
]


def main() -> int:
    for title, request in DEMOS:
        print(f"=== {title} ===")
        status, output = run(request)
        print(output, end="")
        if status != 0:
            return status
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
