#!/usr/bin/env python3
"""Rebuilds data/dga_baseline.json from data/legit_domains.txt.

The baseline is the aggregate letter-frequency distribution of the bundled
legitimate domain labels over the 37-symbol alphabet [a-z0-9-]. The
classification threshold is calibrated to a 10% false-positive rate on the
same corpus: the 90th percentile of per-label divergence scores.
"""

import json
import math
import pathlib
import random

ALPHABET = "abcdefghijklmnopqrstuvwxyz0123456789-"
PSEUDO_COUNT = 0.5  # additive pseudo-count per alphabet symbol
SMOOTHING = None  # probability-space equivalent, set from the corpus size
MIN_LENGTH = 6
CORPUS_ID = "bundled-legit-domains-v1"

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def symbol_indices(label):
    return [ALPHABET.index(c) for c in label if c in ALPHABET]


def registrable_label(domain):
    # Mirrors the scanner: strip one trailing public-suffix label (the
    # bundled corpus only uses single-label suffixes) and a leading www.
    labels = domain.lower().split(".")
    if len(labels) > 1:
        labels = labels[:-1]
    if len(labels) > 1 and labels[0] == "www":
        labels = labels[1:]
    return labels[-1]


def score(label, baseline):
    idx = symbol_indices(label)
    if not idx:
        return None
    n = len(ALPHABET)
    counts = [0] * n
    for i in idx:
        counts[i] += 1
    total = len(idx)
    norm = 1.0 + SMOOTHING * n
    s = 0.0
    for i in range(n):
        if counts[i] == 0:
            continue
        p = counts[i] / total
        q = (baseline[i] + SMOOTHING) / norm
        s += p * math.log2(p / q)
    return s


def main():
    domains = [
        line.strip()
        for line in (DATA / "legit_domains.txt").read_text().splitlines()
        if line.strip() and not line.startswith("#")
    ]
    labels = [registrable_label(d) for d in domains]

    counts = [0] * len(ALPHABET)
    for label in labels:
        for i in symbol_indices(label):
            counts[i] += 1
    total = sum(counts)
    baseline = [c / total for c in counts]
    global SMOOTHING
    SMOOTHING = PSEUDO_COUNT / total

    scores = sorted(s for s in (score(l, baseline) for l in labels) if s is not None)
    # Threshold: midpoint of the band between the corpus 90th percentile
    # (10% false-positive point) and the 10th percentile of seeded random
    # 20-char labels (90% true-positive point).
    fp_point = scores[int(0.9 * len(scores))]
    rng = random.Random(20260824)
    alnum = ALPHABET[:36]
    rand_scores = sorted(
        score("".join(rng.choice(alnum) for _ in range(20)), baseline)
        for _ in range(4000)
    )
    tp_point = rand_scores[len(rand_scores) // 10]
    if tp_point <= fp_point:
        raise SystemExit(
            f"no feasible threshold band: fp_point={fp_point:.4f} "
            f"tp_point={tp_point:.4f}"
        )
    threshold = 0.5 * (fp_point + tp_point)

    out = {
        "corpus_id": CORPUS_ID,
        "alphabet": ALPHABET,
        "frequencies": baseline,
        "threshold_bits": round(threshold, 6),
        "smoothing": SMOOTHING,
        "min_length": MIN_LENGTH,
        "corpus_size": len(labels),
    }
    (DATA / "dga_baseline.json").write_text(json.dumps(out, indent=2) + "\n")

    # Sanity report: false positives on the corpus, true positives on
    # seeded random 20-char alphanumeric labels.
    fp = sum(
        1
        for l in labels
        if (s := score(l, baseline)) is not None
        and s > threshold
        and len(symbol_indices(l)) >= MIN_LENGTH
    )
    rng = random.Random(1337)
    alnum = ALPHABET[:36]
    tp = sum(
        1
        for _ in range(1000)
        if score("".join(rng.choice(alnum) for _ in range(20)), baseline) > threshold
    )
    print(f"corpus={len(labels)} threshold={threshold:.4f} bits")
    print(f"false positives: {fp}/{len(labels)} ({100*fp/len(labels):.1f}%)")
    print(f"true positives on random 20-char labels: {tp}/1000")


if __name__ == "__main__":
    main()
