#!/usr/bin/env python3
"""Independent reference implementation used to freeze golden test vectors.

Written separately from the C++ library so that frozen values are checked by
a second implementation of the same bit-exact contracts (splitmix64, FNV-1a,
Fisher-Yates, rejection sampling, puzzle generation). Run:

    python3 pubgames_ref.py ../data/fixture.csv
"""
import csv
import io
import itertools
import json
import math
import sys
import unicodedata

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, state):
        self.state = state & MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def next_below(self, bound):
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items):
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_distinct(self, k, n):
        pool = list(range(n))
        for i in range(k):
            j = i + self.next_below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def fnv1a(text):
    h = 0xCBF29CE484222325
    for b in text.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & MASK
    return h


def normalize(raw):
    return " ".join(unicodedata.normalize("NFC", raw).split())


def colon_split(title):
    i = title.find(":")
    if i < 0:
        return None
    prefix, suffix = title[:i], title[i + 1:].lstrip()
    if not prefix or not suffix:
        return None
    return prefix, suffix


def load(path):
    with open(path, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f))
    papers = []
    for r in rows[1:]:
        papers.append({
            "title": normalize(r[0]),
            "authors": [normalize(a) for a in r[1].split("|")],
            "year": int(r[2]),
            "venue": normalize(r[3]),
        })
    index = {}
    for pid, p in enumerate(papers):
        for a in p["authors"]:
            index.setdefault(a, []).append(pid)
    eligible = sorted((a for a, ps in index.items() if len(ps) >= 3),
                      key=lambda s: s.encode("utf-8"))
    colon = [pid for pid, p in enumerate(papers) if colon_split(p["title"])]
    return papers, index, eligible, colon


def generate_colon(corpus, seed):
    papers, _, _, colon = corpus
    rng = SplitMix64(seed)
    for _ in range(10000):
        picks = [colon[i] for i in rng.sample_distinct(4, len(colon))]
        splits = [colon_split(papers[p]["title"]) for p in picks]
        pre = {s[0].casefold() for s in splits}
        suf = {s[1].casefold() for s in splits}
        if len(pre) == 4 and len(suf) == 4:
            break
    else:
        raise RuntimeError("exhausted")
    while True:
        perm = [0, 1, 2, 3]
        rng.shuffle(perm)
        if perm != [0, 1, 2, 3]:
            break
    return {
        "game": "colon",
        "seed": f"{seed:016x}",
        "items": [{"paper": p, "prefix": s[0], "suffix": s[1]} for p, s in zip(picks, splits)],
        "display_perm": perm,
    }


def count_partitions(papers, ids):
    sets = [set(papers[i]["authors"]) for i in ids]
    ordered = 0
    for labels in itertools.product(range(3), repeat=9):
        if any(labels.count(g) != 3 for g in range(3)):
            continue
        ok = True
        for g in range(3):
            members = [sets[i] for i in range(9) if labels[i] == g]
            if not set.intersection(*members):
                ok = False
                break
        ordered += ok
    return ordered // 6


def generate_authored(corpus, seed):
    papers, index, eligible, _ = corpus
    rng = SplitMix64(seed)
    for _ in range(10000):
        authors = [eligible[i] for i in rng.sample_distinct(3, len(eligible))]
        groups = []
        for a in authors:
            plist = index[a]
            groups.append([plist[i] for i in rng.sample_distinct(3, len(plist))])
        flat = [p for g in groups for p in g]
        if len(set(flat)) != 9:
            continue
        cross = any(a in papers[p]["authors"]
                    for gi, a in enumerate(authors)
                    for gj, g in enumerate(groups) if gj != gi for p in g)
        if cross:
            continue
        if count_partitions(papers, flat) != 1:
            continue
        grid = list(flat)
        rng.shuffle(grid)
        return {
            "game": "authored",
            "seed": f"{seed:016x}",
            "groups": [{"author": a, "papers": g} for a, g in zip(authors, groups)],
            "grid_order": grid,
        }
    raise RuntimeError("exhausted")


def main():
    r = SplitMix64(0)
    print("splitmix64(0):", [f"0x{r.next_u64():016X}" for _ in range(3)])
    print("fnv a:", f"0x{fnv1a('a'):016X}")
    print("fnv colon:2025-01-31:", f"{fnv1a('colon:2025-01-31'):016x}")
    s0 = fnv1a("shuffle:golden")
    r = SplitMix64(s0)
    items = [0, 1, 2, 3]
    r.shuffle(items)
    print("shuffle S0=fnv('shuffle:golden'):", items)
    r = SplitMix64(s0)
    print("sample_distinct(3,10) S0:", r.sample_distinct(3, 10))

    if len(sys.argv) > 1:
        corpus = load(sys.argv[1])
        papers, index, eligible, colon = corpus
        print("papers", len(papers), "eligible", len(eligible), "colon", len(colon))
        print("eligible:", eligible)
        seed = fnv1a("colon:test-1")
        print("colon golden:", json.dumps(generate_colon(corpus, seed), ensure_ascii=False,
                                          separators=(",", ":")))
        seed = fnv1a("authored:test-1")
        print("authored golden:", json.dumps(generate_authored(corpus, seed),
                                             ensure_ascii=False, separators=(",", ":")))
        print("C(colon,4):", math.comb(len(colon), 4))
        print("colon coupon:", round(len(colon) * math.log(len(colon)) / 4))
        print("authored coupon:", round(len(eligible) * math.log(len(eligible)) / 3))
        for tag in sys.argv[2:]:
            game, _, label = tag.partition(":")
            seed = fnv1a(tag)
            gen = generate_colon if game == "colon" else generate_authored
            print(tag, json.dumps(gen(corpus, seed), ensure_ascii=False,
                                  separators=(",", ":")))


if __name__ == "__main__":
    main()
