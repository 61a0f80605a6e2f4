#!/usr/bin/env python3
"""Writes the synthetic SocioPatterns-format fixture used by the tests.

Ten one-day files of tab-separated "timestamp id_a id_b" contact records at
20-second resolution. Each day's visitors form a preferential-attachment
contact pattern (a few very social people, many with few contacts); every
contact pair is observed one to five times during the day.
"""
import os
import random

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "sociopatterns")


def day_edges(rng, n, m):
    edges = set()
    endpoints = []
    for v in range(m + 1):
        for u in range(v):
            edges.add((u, v))
            endpoints += [u, v]
    for v in range(m + 1, n):
        targets = set()
        while len(targets) < m:
            targets.add(rng.choice(endpoints))
        for t in targets:
            edges.add((t, v))
            endpoints += [t, v]
    return sorted(edges)


def main():
    rng = random.Random(20090417)
    os.makedirs(OUT, exist_ok=True)
    for day in range(1, 11):
        n = rng.randint(140, 190)
        base_id = 1000 * day
        start = 1240000000 + (day - 1) * 86400 + 9 * 3600
        lines = []
        for u, v in day_edges(rng, n, 2):
            for _ in range(rng.randint(1, 5)):
                t = start + 20 * rng.randint(0, 8 * 180)
                a, b = base_id + u, base_id + v
                if rng.random() < 0.5:
                    a, b = b, a
                lines.append((t, a, b))
        lines.sort()
        path = os.path.join(OUT, "day%02d.tsv" % day)
        with open(path, "w") as f:
            f.write("# synthetic contacts, 20-second resolution\n")
            for t, a, b in lines:
                f.write("%d\t%d\t%d\n" % (t, a, b))


if __name__ == "__main__":
    main()
