#!/usr/bin/env python3
"""Writes fixture.json, fixture_expected.json and agree.json.

Every document is assembled from token lists, so the sentence and token
counts below are known from construction rather than re-measured.
"""
import json
import statistics
import sys
from pathlib import Path

WORDS = [
    "Die", "Idee", "ist", "gut", "Ich", "finde", "deine", "Lösung", "spannend", "Außerdem",
    "fehlt", "eine", "Erklärung", "Das", "Geschäftsmodell", "wirkt", "überzeugend", "Kunden",
    "würden", "profitieren", "Vielleicht", "könntest", "du", "Bilder", "ergänzen", "Preis",
    "bleibt", "unklar", "Markt", "2024", "Über", "größer",
]
PUNCT_MID = [",", ";"]
END = [".", "!", "?"]
LABELS = ["strength", "weakness", "suggestion"]
N_DOCS = 36


def sentence(doc, k):
    """Token list of sentence k of document doc; length 4..9 tokens."""
    n_words = 3 + (doc * 7 + k * 3) % 5
    tokens = []
    for w in range(n_words):
        tokens.append(WORDS[(doc * 11 + k * 5 + w * 3) % len(WORDS)])
        if w == 1 and (doc + k) % 4 == 0:
            tokens.append(PUNCT_MID[(doc + k) % 2])
    tokens.append(END[(doc + k) % 3])
    return tokens


def render(tokens):
    out = ""
    for t in tokens:
        if t in PUNCT_MID or t in END:
            out += t
        else:
            out += (" " if out else "") + t
    return out


def document(doc):
    n_sent = 1 + (doc * 5) % 7
    sentences = [sentence(doc, k) for k in range(n_sent)]
    text = ""
    spans = []
    for k, toks in enumerate(sentences):
        if text:
            text += "  " if k % 2 else " "
        start = len(text)
        text += render(toks)
        spans.append((start, len(text)))
    annotations = []
    for k, (start, end) in enumerate(spans):
        if (doc + k) % 5 == 4:
            continue  # left unannotated
        annotations.append({
            "annotator": "A",
            "start": start,
            "end": end,
            "component": LABELS[(doc * 2 + k) % 3],
            "cognitive": 1 + (doc + 2 * k) % 5,
            "emotional": 1 + (doc * 3 + k + (doc + 2 * k) % 5) % 5 if k % 3 else 1 + (doc + 2 * k) % 5,
        })
    tokens = sum(len(t) for t in sentences)
    return {"id": f"doc-{doc:03d}", "text": text, "annotations": annotations}, n_sent, tokens


def distribution(values):
    values = [float(v) for v in values]
    return {
        "total": sum(values),
        "mean": statistics.fmean(values),
        "std_dev": statistics.stdev(values) if len(values) > 1 else 0.0,
        "min": min(values),
        "max": max(values),
        "median": float(statistics.median(values)),
    }


def main(out_dir):
    out_dir = Path(out_dir)
    docs, sent_counts, token_counts = [], [], []
    for d in range(N_DOCS):
        doc, s, t = document(d)
        docs.append(doc)
        sent_counts.append(s)
        token_counts.append(t)

    anns = [a for d in docs for a in d["annotations"]]
    components = {}
    for label in LABELS:
        per_doc = [sum(1 for a in d["annotations"] if a["component"] == label) for d in docs]
        dist = distribution(per_doc)
        dist["share"] = dist["total"] / len(anns)
        components[label] = dist
    dims = {}
    for dim in ("cognitive", "emotional"):
        scores = [a[dim] for a in anns]
        dims[dim] = {
            "histogram": [scores.count(v) for v in range(1, 6)],
            "mean": statistics.fmean(scores),
            "std_dev": statistics.stdev(scores),
            "median": float(statistics.median(scores)),
        }
    expected = {
        "documents": N_DOCS,
        "annotations": len(anns),
        "sentences": distribution(sent_counts),
        "tokens": distribution(token_counts),
        "components": components,
        "dimensions": dims,
        "correlation": statistics.correlation([a["cognitive"] for a in anns],
                                              [a["emotional"] for a in anns]),
    }
    (out_dir / "fixture.json").write_text(
        json.dumps({"documents": docs}, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")
    (out_dir / "fixture_expected.json").write_text(json.dumps(expected, indent=1) + "\n")

    # Two annotators marking identical spans.
    agree = []
    for d in docs[:8]:
        anns_b = [dict(a, annotator="B") for a in d["annotations"]]
        agree.append({"id": d["id"], "text": d["text"], "annotations": d["annotations"] + anns_b})
    (out_dir / "agree.json").write_text(
        json.dumps({"documents": agree}, ensure_ascii=False, indent=1) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent)
