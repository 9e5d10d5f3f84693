#!/usr/bin/env python3
"""Transcribe the picture-environment grid diagrams of a LaTeX source into
the corpus JSON read by knotarc.

Each picture draws a grid on a lattice of pitch 5: a segment from
\\put(x, y){\\line(0, s){len}} is a vertical arc in column x/5 - 1 between
rows y/5 - 1 and (y + s*len)/5 - 1. Horizontal segments are implied by the
verticals and only cross-checked. Category headings are the starred
subsections preceding each group of pictures.

usage: transcribe_picture_grids.py SOURCE [-o OUT]
"""

import argparse
import json
import re
import sys

LIST_HEADING = re.compile(r"\\subsection\{A partial list of (\d+) crossing knots")
PICTURE_BEGIN = re.compile(r"\\begin\{picture\}")
PICTURE_END = re.compile(r"\\end\{picture\}")
NAME = re.compile(r"\\put\(\s*-?\d+,\s*-?\d+\)\{\$(\d+n\d+)\$\}")
LINE = re.compile(r"\\put\(\s*(\d+),\s*(\d+)\)\{\\line\(\s*(-?\d),\s*(-?\d)\)\{(\d+)\}\}")


def category_name(line):
    if "Almost alternating" in line:
        return "almost alternating"
    m = re.search(r"\$(\(?\d+(?:,1\))?)\$-nonalternating", line)
    if m:
        return m.group(1) + "-nonalternating"
    return None


def transcribe(text):
    entries = []
    crossings = None
    category = None
    picture = None
    for lineno, line in enumerate(text.splitlines(), 1):
        m = LIST_HEADING.search(line)
        if m:
            crossings = int(m.group(1))
            continue
        if crossings is None:
            continue
        if line.lstrip().startswith("\\subsection*"):
            category = category_name(line)
            continue
        if line.lstrip().startswith("\\section") or line.lstrip().startswith("\\bibliography"):
            break
        if PICTURE_BEGIN.search(line):
            picture = {"name": None, "vertical": [], "horizontal": [], "line": lineno}
            continue
        if picture is None:
            continue
        m = NAME.search(line)
        if m:
            picture["name"] = m.group(1)
        m = LINE.search(line)
        if m:
            x, y, dx, dy, length = map(int, m.groups())
            if dx == 0:
                picture["vertical"].append((x, y, y + dy * length))
            else:
                picture["horizontal"].append((y, x, x + dx * length))
        if PICTURE_END.search(line):
            entry = to_entry(picture, category, crossings)
            if entry is not None:
                entries.append(entry)
            picture = None
    return entries


def to_entry(picture, category, crossings):
    if picture["name"] is None or not picture["vertical"]:
        return None
    def index(coord):
        if coord % 5 != 0:
            raise ValueError(f"{picture['name']}: coordinate {coord} is off the lattice")
        return coord // 5 - 1
    columns = {}
    for x, y0, y1 in picture["vertical"]:
        c = index(x)
        if c in columns:
            raise ValueError(f"{picture['name']}: column {c} drawn twice")
        columns[c] = sorted((index(y0), index(y1)))
    n = len(columns)
    if sorted(columns) != list(range(n)):
        raise ValueError(f"{picture['name']}: columns are not 0..{n - 1}")
    # every horizontal must join two marks of its row
    marks = {}
    for c, (a, b) in columns.items():
        marks.setdefault(a, set()).add(c)
        marks.setdefault(b, set()).add(c)
    for y, x0, x1 in picture["horizontal"]:
        row, ends = index(y), {index(x0), index(x1)}
        if marks.get(row) != ends:
            raise ValueError(f"{picture['name']}: horizontal in row {row} does not join its marks")
    return {
        "name": picture["name"],
        "category": category,
        "crossings": crossings,
        "columns": [columns[c] for c in range(n)],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("source")
    ap.add_argument("-o", "--out", default="-")
    args = ap.parse_args()
    with open(args.source, encoding="utf-8") as f:
        entries = transcribe(f.read())
    entries.sort(key=lambda e: e["name"])
    # one entry per line
    lines = [json.dumps(e, separators=(",", ":")) for e in entries]
    out = '{"entries":[\n' + ",\n".join(lines) + "\n]}"
    if args.out == "-":
        sys.stdout.write(out + "\n")
    else:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(out + "\n")
    counts = {}
    for e in entries:
        key = (e["crossings"], e["category"])
        counts[key] = counts.get(key, 0) + 1
    for (c, cat), k in sorted(counts.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))):
        print(f"{c} {cat}: {k}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
