#!/usr/bin/env python3
# Copyright 2026 The modkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the checked-in test fixtures. Output is deterministic."""

import json
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

# Class-disjoint vocabularies for the separable corpus.
OFFENSIVE_WORDS = """
trash pathetic idiot clown loser garbage worthless moron stupid creep
dumb fool nasty disgusting filthy rotten lame coward scum jerk
""".split()
FRIENDLY_WORDS = """
lovely kind brilliant wonderful helpful thanks beautiful gentle happy sweet
amazing bright cheerful delightful friendly generous graceful honest joyful warm
""".split()


def separable(rng):
    comments, labels = [], {}
    for i in range(200):
        offensive = i % 2 == 0
        words = OFFENSIVE_WORDS if offensive else FRIENDLY_WORDS
        text = " ".join(rng.choice(words) for _ in range(rng.randint(4, 9)))
        cid = f"c{i:03d}"
        comments.append({"id": cid, "author": f"user{i % 17}", "text": text, "replies": []})
        labels[cid] = 1 if offensive else 0
    # Nest a few comments as replies so ingest exercises flattening.
    roots = []
    for i, c in enumerate(comments):
        if i % 10 == 9:
            roots[-1]["replies"].append(c)
        else:
            roots.append(c)
    tree = {"post_id": "p-separable", "post_author": "poster", "comments": roots}
    out = HERE / "separable"
    out.mkdir(exist_ok=True)
    (out / "tree.json").write_text(json.dumps(tree, indent=1) + "\n")
    (out / "labels.json").write_text(json.dumps(labels, indent=1, sort_keys=True) + "\n")


SLANG = ["simp", "boomer", "cap", "no cap", "sus", "based", "ratio", "mid", "bet", "lowkey"]
PLAIN = """
the people who say this are always wrong and you know it
that video was so funny i watched it twice
why would anyone think this is a good idea
he is such a simp for that streamer
ok boomer go back to your newspaper
this is cap and everyone knows it
my friends were laughing at the comments
nobody asked for your opinion on this
""".strip().splitlines()
ALIASES = [
    "face_with_tears_of_joy", "rolling_on_the_floor_laughing", "skull", "clown_face",
    "fire", "thumbs_up", "red_heart", "pile_of_poo", "smiling_face_with_heart_eyes",
    "loudly_crying_face",
]


def slang_corpus(rng):
    lines = []
    for _ in range(120):
        parts = rng.choice(PLAIN).split()
        for _ in range(rng.randint(1, 3)):
            parts.insert(rng.randint(0, len(parts)), rng.choice(SLANG))
        if rng.random() < 0.6:
            parts.insert(rng.randint(0, len(parts)), rng.choice(ALIASES))
        lines.append(" ".join(parts))
    (HERE / "slang_corpus.txt").write_text("\n".join(lines) + "\n")
    (HERE / "slang_aliases.txt").write_text("\n".join(ALIASES) + "\n")


ANALYTICS_TEXTS = [
    ("Offensive", "You are a clown, and you know it."),
    ("Offensive", "What a clown... what a total clown!"),
    ("NotOffensive", "I love this video so much"),
    ("NotOffensive", "This video is great, I love it"),
    ("Offensive", "Nobody cares about your opinion, clown"),
    ("NotOffensive", "Great video! Thanks for sharing."),
    ("NotOffensive", "I watched it twice; it is that good"),
    ("Offensive", "Go away, nobody cares!!!"),
    ("NotOffensive", "so much love for this channel"),
    ("NotOffensive", "Thanks for the video, great work"),
]


def analytics_fixture():
    entries = []
    for i, (label, text) in enumerate(ANALYTICS_TEXTS):
        entries.append({"id": f"a{i}", "text": text, "post_id": "p-analytics",
                        "label": 1 if label == "Offensive" else 0})
    doc = {"annotation_criteria": [], "entries": entries}
    out = HERE / "analytics"
    out.mkdir(exist_ok=True)
    (out / "dataset.json").write_text(json.dumps(doc, indent=1) + "\n")


def main():
    rng = random.Random(20240601)
    separable(rng)
    slang_corpus(rng)
    analytics_fixture()


if __name__ == "__main__":
    main()
