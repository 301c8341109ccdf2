"""Regenerates a CLI output and compares it to the stored golden copy.

Values are compared numerically (not byte-wise), so the golden file stays
valid across platforms with differing libm rounding.
"""

import csv
import subprocess
import sys

TOLERANCE = 1e-9


def read_table(path):
    header, rows = None, []
    with open(path, newline="") as handle:
        for record in csv.reader(handle):
            if record[0].startswith("#"):
                continue
            if header is None:
                header = record
            else:
                rows.append([float(v) for v in record])
    return header, rows


def main():
    qrabi_bin, golden_path, work_dir = sys.argv[1:4]
    fresh_path = work_dir + "/golden_fresh.csv"
    subprocess.run(
        [qrabi_bin, "inversion", "--g", "0.06", "--alpha-sq", "10",
         "--backends", "rwa,crwa,exact", "--tau-max", "4", "--n-points", "21",
         "--n-cut", "60", "--out", fresh_path],
        check=True,
    )
    want_header, want = read_table(golden_path)
    got_header, got = read_table(fresh_path)
    if want_header != got_header:
        sys.exit(f"header changed: {want_header} vs {got_header}")
    if len(want) != len(got):
        sys.exit(f"row count changed: {len(want)} vs {len(got)}")
    worst = 0.0
    for row_want, row_got in zip(want, got):
        for a, b in zip(row_want, row_got):
            worst = max(worst, abs(a - b))
    if worst > TOLERANCE:
        sys.exit(f"golden mismatch: worst |diff| = {worst}")
    print(f"golden comparison ok, worst |diff| = {worst}")


if __name__ == "__main__":
    main()
