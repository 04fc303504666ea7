#!/usr/bin/env python3
# Copyright 2026 The Taxsem Authors.
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

"""Freezes NLTK Wu-Palmer values for noun pairs into a TSV oracle.

Usage: freeze_wup_oracle.py OUT.tsv  (needs nltk with the wordnet corpus)
Rows: synset id a, synset id b, nltk wup_similarity.
"""

import random
import sys

from nltk.corpus import wordnet as wn


def main():
  out_path = sys.argv[1] if len(sys.argv) > 1 else 'nltk_wup_pairs.tsv'
  random.seed(7)
  nouns = list(wn.all_synsets('n'))
  pairs = [
      (wn.synset('hobby.n.01'), wn.synset('hobby.n.03')),
      (wn.synset('falcon.n.01'), wn.synset('hobby.n.03')),
      (wn.synset('trunk.n.05'), wn.synset('nose.n.01')),
  ]
  for _ in range(400):
    pairs.append((random.choice(nouns), random.choice(nouns)))
  with open(out_path, 'w') as out:
    for a, b in pairs:
      out.write('1%08d\t1%08d\t%.17g\n' % (a.offset(), b.offset(),
                                          a.wup_similarity(b)))


if __name__ == '__main__':
  main()
