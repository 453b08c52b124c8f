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

# Embeds the files under data/ into include/modkit/data/bundled.hpp so the
# header-only library works without any runtime data directory.
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
FILES = [
    ("stopwords", "stopwords.txt"),
    ("emoticons", "emoticons.tsv"),
    ("emoji_aliases", "emoji_aliases.tsv"),
    ("lemma_exceptions", "lemma_exceptions.tsv"),
    ("lemma_rules", "lemma_rules.tsv"),
    ("vocab", "vocab.txt"),
]

LICENSE = (ROOT / "tools" / "license_header.txt").read_text()

parts = [LICENSE, "// Generated by tools/embed_data.py from data/. Do not edit.\n\n",
         "#pragma once\n\n#include <string_view>\n\nnamespace modkit::bundled {\n\n"]
for name, fname in FILES:
    text = (ROOT / "data" / fname).read_text(encoding="utf-8")
    assert ")modkit\"" not in text
    parts.append(f"inline constexpr std::string_view k_{name} = R\"modkit({text})modkit\";\n\n")
parts.append("}  // namespace modkit::bundled\n")
(ROOT / "include" / "modkit" / "data" / "bundled.hpp").write_text("".join(parts), encoding="utf-8")
