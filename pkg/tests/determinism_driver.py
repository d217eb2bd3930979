"""Run every CLI subcommand on every small-corpus graph, in text and JSON,
and print everything to stdout. Used by the determinism acceptance test,
which runs this script twice under different hash seeds."""

import io
import os
import sys
import tempfile

sys.path.insert(0, os.path.dirname(__file__))

from edgehrhart import cli  # noqa: E402
from edgehrhart.graphcore import format_graph  # noqa: E402

from corpus import SMALL_CORPUS  # noqa: E402


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        os.chdir(tmp)
        for name in sorted(SMALL_CORPUS):
            path = f"{name}.graph"
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(format_graph(SMALL_CORPUS[name]))
            for cmd in cli.SUBCOMMANDS:
                for fmt in ("text", "json"):
                    out, err = io.StringIO(), io.StringIO()
                    code = cli.run(cli.RunConfig(cmd, path, fmt=fmt, groebner=True), out, err)
                    sys.stdout.write(f"### {name} {cmd} {fmt} exit={code}\n")
                    sys.stdout.write(out.getvalue())
                    sys.stdout.write(err.getvalue())


if __name__ == "__main__":
    main()
