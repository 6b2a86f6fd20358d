"""Run every self-checking reproduction and print one line per claim."""

import io
import json
import sys

from tropbasis.cli import REPRO, run


def main():
    failed = 0
    for verb in REPRO:
        buf = io.StringIO()
        code = run(["repro", verb], out=buf)
        rep = json.loads(buf.getvalue())
        for ch in rep["result"]["checks"]:
            print(f"{verb:16s} {'PASS' if ch['ok'] else 'FAIL'}  {ch['claim']}")
        failed += code != 0
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
