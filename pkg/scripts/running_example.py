"""Write DOT renderings of the running example: the solved game and the
potential/actual/primary provenance of a few positions."""

import argparse
from pathlib import Path

from gameprov.formats import export_dot, parse_edge_list
from gameprov.provenance import Kind, provenance
from gameprov.solver import solve

ROOT = Path(__file__).resolve().parents[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", type=Path, default=ROOT / "tests" / "fixtures" / "fig1.edges")
    ap.add_argument("--out", type=Path, default=Path("figures"))
    ap.add_argument("--nodes", nargs="*", default=["c", "d"])
    args = ap.parse_args()

    g = parse_edge_list(args.input.read_text())
    s, trace = solve(g)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "solved.dot").write_text(export_dot(s))
    for x in args.nodes:
        for kind in Kind:
            (args.out / f"{kind.value}_{x}.dot").write_text(export_dot(provenance(s, x, kind)))
    print("\n".join(trace.lines()))
    print(f"wrote {len(list(args.out.glob('*.dot')))} DOT files to {args.out}")


if __name__ == "__main__":
    main()
