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

# Regenerates data/vocab.txt, the small bundled WordPiece base vocabulary.
# Layout: specials, single characters, continuation characters, common
# continuation pieces, then whole words. Line number = token id.
import string
import sys

SPECIALS = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"]

PIECES = """s es ed ing er ers est ly y ie ies ness ment ments tion tions sion
al ial ful less able ible ous ive ity ism ist ists ize ise ish ic ical an ian
en ened ening ance ence ant ent ry ary ory le les el et ette ion ions age ages
in on un ut ot at it im ip op ap up ub ag ig og ug ad id od ud ab ob am um em
mer mers ner per ter ters der ber ger ker ler ver ster
ck cks ch sh th ght nt nd st ng nk mp mb ll ss tt pp rr ff dd nn
a e i o u""".split()

WORDS = """the be to of and a in that have i it for not on with he as you do at
this but his by from they we say her she or an will my one all would there
their what so up out if about who get which go me when make can like time no
just him know take people into year your good some could them see other than
then now look only come its over think also back after use two how our work
first well way even new want because any these give day most us is are was
were been has had did does done said got made went gone came going being
very really actually literally always never ever still again already
yes yeah yea yep nope no nah ok okay lol lmao lmfao omg wtf idk tbh smh fr
bro bruh sis dude guy guys girl girls boy boys man men woman women kid kids
mom dad mother father brother sister family friend friends baby babies
love hate like hated loved liked hating loving
dumb stupid idiot idiots ugly fat loser losers trash clown clowns joke
funny cute pretty nice sweet kind cool awesome amazing great best better
bad worse worst terrible horrible disgusting gross weird crazy insane
sad happy mad angry upset sorry thanks thank please welcome
shut stop stay leave let keep put set try tried trying help need needs
talk talking talked say saying says said tell telling told ask asking
read reading write writing wrote learn learning school teacher class
skill skills critical thinking thought think thinks brain brains smart
graph graphs phrase phrases message messages comment comments post posts
video videos song songs music dance dancing watch watching watched
someone somebody anyone anybody everyone everybody nobody nothing
something everything anything where here there why how who whom whose
because since until while before after during above below under over
again further once more most much many few less least enough
old young life live lives living dead die died dying kill killed
girlfriend boyfriend wife husband child children parent parents
real fake true false right wrong fact facts opinion opinions
world country countries city home house room car phone money job
black white red blue green yellow pink purple orange brown
face faces heart hearts eye eyes hand hands head body mouth
joy tears tear laugh laughing laughed cry crying cried smile smiling
skull fire thumbs clap clapping pray praying eyes rolling
big small little long short high low full empty whole half
first last next early late soon today tomorrow yesterday night morning
week weeks month months year years hour hours minute minutes second
always sometimes often usually maybe probably definitely
god jesus church religion race racist racism sexist women gay straight
trans black asian white hair skin color colour language english
boom sim vibe vibes
mid lit tea queen king kings queens
block blocked report reported ban banned delete deleted account
follow following followers like likes view views share shared
game games play playing played player team win won lose lost
fight fighting fought hit hurt pain sick tired sleep sleeping
eat eating food drink drinking water coffee pizza
know knows knew known understand understood mean means meant
feel feels feeling felt seem seems seemed look looks looked
find found give gives given gave take takes taken took
come comes coming came get gets getting got make makes making
go goes going went want wants wanted wanting
call called calling name names named
show showed shown show shows point points
person persons human humans animal animals dog dogs cat cats
point pointless useless worthless hopeless brainless clueless
childish responses response respond typing type types typed
correctly correct wrong wrongly simply simple hard easy
ur u im gonna gon cant cause wanna gotta lemme gimme dont wont
isn aren wasn weren don doesn didn can couldn shouldn wouldn
ain gotta kinda sorta outta""".split()

seen = set()
out = []


def add(tok):
    if tok not in seen:
        seen.add(tok)
        out.append(tok)


for t in SPECIALS:
    add(t)
chars = [c for c in string.printable if not c.isspace()]
for c in chars:
    add(c)
for c in chars:
    add("##" + c)
for p in PIECES:
    add("##" + p)
for w in WORDS:
    add(w.lower())

path = sys.argv[1] if len(sys.argv) > 1 else "data/vocab.txt"
with open(path, "w", encoding="utf-8", newline="\n") as f:
    for t in out:
        f.write(t + "\n")
