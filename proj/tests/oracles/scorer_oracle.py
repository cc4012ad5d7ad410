"""Independent reference for the valence rules, used to freeze scorer fixtures.

Run: python3 scorer_oracle.py ../fixtures/mini_sentiment.tsv ../fixtures/scorer_sentences.txt
Prints `sentence<TAB>compound` lines with 12 significant digits.
"""
import math
import string
import sys

CAPS, NEG, BANG, ALPHA = 0.733, -0.74, 0.292, 15.0


def load(path):
    val, boost, neg, sec = {}, {}, set(), "v"
    for line in open(path, encoding="utf-8"):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            sec = {"#boosters": "b", "#negators": "n"}.get(line, sec)
            continue
        parts = line.split("\t")
        if sec == "v":
            val[parts[0].lower()] = float(parts[1])
        elif sec == "b":
            boost[parts[0].lower()] = float(parts[1])
        else:
            neg.add(parts[0].lower())
    return val, boost, neg


def tokens(text):
    out = []
    for w in text.split():
        if w.lower().startswith(("http://", "https://")) or w.startswith("@"):
            continue
        if not any(c.isalnum() for c in w):
            out.append(w)
            continue
        w = w.strip(string.punctuation)
        if w:
            out.append(w)
    return out


def shouted(w):
    letters = [c for c in w if c.isalpha()]
    return len(letters) >= 2 and all(c.isupper() for c in letters)


def compound(text, lex):
    val, boost, neg = lex
    toks = tokens(text)
    low = [t.lower() for t in toks]
    n_shout = sum(shouted(t) for t in toks)
    n_letter = sum(any(c.isalpha() for c in t) for t in toks)
    mixed = 0 < n_shout < n_letter
    total = 0.0
    for i, w in enumerate(low):
        if w in boost or w not in val or val[w] == 0:
            continue
        v = val[w]
        s = math.copysign(1.0, v)
        if mixed and shouted(toks[i]):
            v += s * CAPS
        for j in (1, 2):
            if i - j >= 0 and low[i - j] in boost:
                v += s * boost[low[i - j]]
        if any(i - j >= 0 and low[i - j] in neg for j in (1, 2, 3)):
            v *= NEG
        total += v
    if total != 0:
        total += math.copysign(1.0, total) * BANG * min(text.count("!"), 4)
    return total / math.sqrt(total * total + ALPHA) if total else 0.0


if __name__ == "__main__":
    lex = load(sys.argv[1])
    for line in open(sys.argv[2], encoding="utf-8"):
        line = line.rstrip("\n")
        if line:
            print(f"{line}\t{compound(line, lex):.12g}")
