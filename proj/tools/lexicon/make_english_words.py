#!/usr/bin/env python3
# Copyright 2026 The efparse Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Regenerates core/data/lexicon/english_words.txt from the wordfreq
# frequency lists (data licensed CC BY-SA 4.0, see core/data/lexicon/README.md).
import re
import sys

from wordfreq import top_n_list

LIMIT = 50000

def main(out_path):
    words, seen = [], set()
    for w in top_n_list("en", 80000):
        if re.fullmatch(r"[a-z][a-z'\-]*[a-z]|[a-z]", w) and w not in seen:
            seen.add(w)
            words.append(w)
        if len(words) >= LIMIT:
            break
    words.sort()
    with open(out_path, "w") as f:
        f.write("\n".join(words) + "\n")

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "core/data/lexicon/english_words.txt")
