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

# Regenerates data/emoji_aliases.tsv from the `emoji` package's CLDR names.
# Only single-code-point emoji are kept (variation selectors stripped);
# aliases are lowercased snake_case.
import re
import sys

import emoji

EXCLUDED = {0xA9, 0xAE, 0x2122, 0x203C, 0x2049}


def alias(name):
    return re.sub(r"[^a-z0-9]+", "_", name.strip(":").lower()).strip("_")


rows = {}
for seq, info in emoji.EMOJI_DATA.items():
    base = seq.replace("️", "")
    if len(base) != 1 or ord(base) in EXCLUDED:
        continue
    rows[ord(base)] = alias(info["en"])

if len(set(rows.values())) != len(rows):
    sys.exit("alias collision")

out = sys.argv[1] if len(sys.argv) > 1 else "data/emoji_aliases.tsv"
with open(out, "w", encoding="utf-8", newline="\n") as f:
    f.write("# emoji<TAB>alias (CLDR short names, snake_case)\n")
    for cp in sorted(rows):
        f.write(f"{chr(cp)}\t{rows[cp]}\n")
