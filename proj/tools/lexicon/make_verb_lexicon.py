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

# Regenerates core/data/lexicon/verbs.txt: verb lemmas plus their regular
# (-s, -ed, -ing) and irregular inflections, one lowercase form per line.
#
# Lemmas whose dominant use in log text is nominal (file, host, node, port,
# process, request, ...) are left out on purpose; tagging them as verbs would
# block merges of segments where they act as values or labels.
import sys

LEMMAS = """
abandon abort absorb accelerate accept access accommodate accompany accomplish
accumulate accuse achieve acknowledge acquire activate adapt add address adjust
admit adopt advance advertise advise affect afford aggregate agree aim alert
align allocate allow alter amend analyse analyze announce annotate answer
anticipate append apply appoint appreciate approach approve archive argue arise
arrange arrive ask assemble assert assess assign assist associate assume assure
attach attack attempt attend attract audit augment authenticate authorize
automate avoid await awake back backup balance ban bar base batch bear beat
become beg begin behave believe belong bend bet bind bite blame bleed blend
bless blink blow board boast boil book boost boot borrow bother bounce bound
break breathe breed bring broadcast browse buffer build burn burst bury buy
calculate calibrate call cancel capture care carry cast catch cause cease
challenge change characterize charge chase chat check cheer choose cite claim
clarify classify clean clear click climb clip close coerce collapse collect
combine come comment commit communicate compare compensate compete compile
complain complete comply compose compress compute conceal concede conceive
concentrate conclude conduct configure confirm conflict confront confuse
connect consider consist consolidate construct consult consume contact contain
continue contribute control convert convey convince cook copy correct
correspond cost cough count cover crash create creep criticize cross crush cry
cut damage dance deal debug decay deceive decide declare decline decode
decompress decrease decrypt dedicate deduce deduct defeat defend defer define
delay delegate delete deliver demand demolish demonstrate deny depart depend
deploy deprecate deprive derive descend describe deserialize deserve design
desire destroy detach detect determine develop devise diagnose dictate die
differ dig direct disable disagree disallow disappear disappoint discard
discharge disclose disconnect discourage discover discuss dismiss dispatch
display dispose dissolve distinguish distribute disturb dive divide do document
dominate donate download drag drain draw dream dress drift drink drive drop
drown dump duplicate dwell earn eat edit educate eject elect eliminate embed
emerge emit emphasize employ empty emulate enable enclose encode encounter
encourage encrypt end endorse enforce engage enhance enjoy enlarge enqueue
enroll ensure enter entertain enumerate equip erase escape establish estimate
evacuate evaluate evict evolve examine exceed exchange exclude excuse execute
exercise exhaust exist exit expand expect expel experience expire explain
explode exploit explore export expose express extend extract facilitate fail
fall fasten favor fear feed feel fetch fight fill filter finalize find finish
fire fit fix flag flash flee fling float flood flow flush fly focus fold follow
forbid force forecast foresee forget forgive fork format forward found free
freeze frighten fulfil fulfill gain gather generate get give go govern grab
grant grasp greet grind grip grow guarantee guard guess guide halt handle hang
happen harm hash hate have hear heat help hesitate hide highlight hire hit hold
hope hurry hurt identify ignore illustrate imagine implement imply import
impose impress improve include incorporate increase increment indicate induce
infer inform inherit inhibit initialize initiate inject injure insert insist
inspect install instantiate instruct insure integrate intend interact
intercept interfere interpret interrupt introduce invade invalidate invent
invest investigate invite invoke involve isolate issue iterate join judge jump
justify keep kick kill kneel knit knock know label lack land last laugh launch
lay lead lean leap learn leave lend let lie lift light like limit link listen
live load locate lock lose love lower maintain make manage manipulate map mark
marry match matter mean measure meet melt mention merge migrate mind minimize
miss mix modify monitor mount move multiply mutate navigate need negotiate
nominate normalize note notice notify obey object oblige observe obtain occupy
occur offer omit open operate oppose optimize order organize overflow overlap
overload override overwhelm overwrite owe own pack paint park parse participate
pass pause pay perceive perform permit persist persuade pick ping place plan
play plead please plug point poll pop populate possess post postpone pour
practise pray precede predict prefer prepare prescribe present preserve press
pretend prevent print prioritize proceed produce program prohibit promise
promote prompt propagate propose protect prove provide provision publish pull
punish purchase purge pursue push put qualify query question quit race raise
reach react read realize reallocate reason reboot rebuild recall receive
recognize recommend reconcile reconnect recover recruit recycle redirect reduce
refer refine reflect refresh refuse regard register regret reject relate relax
release relieve rely remain remember remind remove rename render renew reopen
repair repeat replace replicate reply represent reproduce require rescue
resemble reserve reset reside resign resist resolve respond rest restart
restore restrict resume retain retire retrieve retry return reveal reverse
review revise revoke reward ride ring rise roll rollback rotate route rub ruin
rule run rush sample satisfy save say scale scan schedule score scratch search
secure see seek seem select sell send separate serialize serve set settle sew
shake shape share shed shift shine shoot shout show shrink shuffle shut shutdown
sign signal simulate sing sink sit skip sleep slide slip smell smile snap
solve sort sound speak specify speed spell spend spill spin split spoil spread
spring squeeze stack stand stare start starve stay steal steer stick sting
stop store strike strip strive study submit subscribe subtract succeed suffer
suggest summarize supply support suppose suspend swap swear sweep swell swim
swing switch sync synchronize take talk tear tell tend terminate test thank
think threaten throttle throw tie time-out timeout tolerate touch trace track
trade train transfer transform translate transmit trap travel treat trigger
trim truncate trust try tune turn type unblock uncover undergo understand
undertake undo uninstall unite unload unlock unmount unpack unregister
unsubscribe update upgrade upload urge use utilize vacate validate vanish vary
verify view violate visit vote wait wake walk wander want warn wash waste watch
wear weave weep weigh welcome win wind wipe wish withdraw withhold withstand
wonder work worry wrap write yield
""".split()

IRREGULAR = {
    "arise": ["arose", "arisen"], "awake": ["awoke", "awoken"],
    "bear": ["bore", "borne"], "beat": ["beaten"], "become": ["became"],
    "begin": ["began", "begun"], "bend": ["bent"], "bet": [],
    "bind": ["bound"], "bite": ["bit", "bitten"], "bleed": ["bled"],
    "blow": ["blew", "blown"], "break": ["broke", "broken"],
    "breed": ["bred"], "bring": ["brought"], "broadcast": [],
    "build": ["built"], "burn": ["burnt"], "burst": [], "buy": ["bought"],
    "cast": [], "catch": ["caught"], "choose": ["chose", "chosen"],
    "come": ["came"], "cost": [], "creep": ["crept"], "cut": [],
    "deal": ["dealt"], "dig": ["dug"], "do": ["did", "done", "does"],
    "draw": ["drew", "drawn"], "dream": ["dreamt"], "drink": ["drank", "drunk"],
    "drive": ["drove", "driven"], "dwell": ["dwelt"], "eat": ["ate", "eaten"],
    "fall": ["fell", "fallen"], "feed": ["fed"], "feel": ["felt"],
    "fight": ["fought"], "find": ["found"], "flee": ["fled"],
    "fling": ["flung"], "fly": ["flew", "flown"], "forbid": ["forbade", "forbidden"],
    "forecast": [], "foresee": ["foresaw", "foreseen"], "forget": ["forgot", "forgotten"],
    "forgive": ["forgave", "forgiven"], "freeze": ["froze", "frozen"],
    "get": ["got", "gotten"], "give": ["gave", "given"], "go": ["went", "gone", "goes"],
    "grind": ["ground"], "grow": ["grew", "grown"], "hang": ["hung"],
    "have": ["had", "has"], "hear": ["heard"], "hide": ["hid", "hidden"],
    "hit": [], "hold": ["held"], "hurt": [], "keep": ["kept"],
    "kneel": ["knelt"], "knit": [], "know": ["knew", "known"], "lay": ["laid"],
    "lead": ["led"], "leap": ["leapt"], "learn": ["learnt"], "leave": ["left"],
    "lend": ["lent"], "let": [], "lie": ["lay", "lain", "lying"], "light": ["lit"],
    "lose": ["lost"], "make": ["made"], "mean": ["meant"], "meet": ["met"],
    "overwrite": ["overwrote", "overwritten"], "pay": ["paid"],
    "put": [], "quit": [], "read": [], "rebuild": ["rebuilt"],
    "ride": ["rode", "ridden"], "ring": ["rang", "rung"], "rise": ["rose", "risen"],
    "run": ["ran"], "say": ["said"], "see": ["saw", "seen"], "seek": ["sought"],
    "sell": ["sold"], "send": ["sent"], "set": [], "sew": ["sewn"],
    "shake": ["shook", "shaken"], "shed": [], "shine": ["shone"],
    "shoot": ["shot"], "show": ["shown"], "shrink": ["shrank", "shrunk"],
    "shut": [], "shutdown": [], "sing": ["sang", "sung"], "sink": ["sank", "sunk"],
    "sit": ["sat"], "sleep": ["slept"], "slide": ["slid"], "speak": ["spoke", "spoken"],
    "speed": ["sped"], "spell": ["spelt"], "spend": ["spent"], "spill": ["spilt"],
    "spin": ["spun"], "split": [], "spoil": ["spoilt"], "spread": [],
    "spring": ["sprang", "sprung"], "stand": ["stood"], "steal": ["stole", "stolen"],
    "stick": ["stuck"], "sting": ["stung"], "strike": ["struck"],
    "strive": ["strove", "striven"], "swear": ["swore", "sworn"],
    "sweep": ["swept"], "swell": ["swollen"], "swim": ["swam", "swum"],
    "swing": ["swung"], "take": ["took", "taken"], "tear": ["tore", "torn"],
    "tell": ["told"], "think": ["thought"], "throw": ["threw", "thrown"],
    "undergo": ["underwent", "undergone"], "understand": ["understood"],
    "undertake": ["undertook", "undertaken"], "undo": ["undid", "undone"],
    "wake": ["woke", "woken"], "wear": ["wore", "worn"], "weave": ["wove", "woven"],
    "weep": ["wept"], "win": ["won"], "wind": ["wound"], "withdraw": ["withdrew", "withdrawn"],
    "withhold": ["withheld"], "withstand": ["withstood"], "write": ["wrote", "written"],
}

# Final consonant doubled before -ed/-ing.
DOUBLE = set("""
ban bar beg chat clip commit control drag drop equip fit flag grab grip hit
knit map occur omit pat permit plan plug pop prefer refer regret rub scan
ship shed shop shut sit skip slip snap spin split stop strip swap tap trap
trim upset wrap submit compel patrol propel rebut
""".split())


def third_person(v):
    if v.endswith(("s", "sh", "ch", "x", "z", "o")):
        return v + "es"
    if v.endswith("y") and len(v) > 1 and v[-2] not in "aeiou":
        return v[:-1] + "ies"
    return v + "s"


def past(v):
    if v.endswith("e"):
        return v + "d"
    if v.endswith("y") and len(v) > 1 and v[-2] not in "aeiou":
        return v[:-1] + "ied"
    if v in DOUBLE:
        return v + v[-1] + "ed"
    return v + "ed"


def gerund(v):
    if v.endswith("ie"):
        return v[:-2] + "ying"
    if v.endswith("e") and not v.endswith(("ee", "ye", "oe")) and len(v) > 2:
        return v[:-1] + "ing"
    if v in DOUBLE:
        return v + v[-1] + "ing"
    return v + "ing"


def main(out_path):
    forms = set()
    for lemma in LEMMAS:
        forms.add(lemma)
        if "-" in lemma:
            continue
        forms.add(third_person(lemma))
        forms.add(gerund(lemma))
        if lemma in IRREGULAR:
            forms.update(IRREGULAR[lemma])
            # Verbs that keep a regular past alongside irregular forms.
            if lemma in {"burn", "dream", "learn", "spell", "spill", "spoil", "light", "hang", "lie", "wind", "sew", "swell", "show", "knit", "broadcast", "forecast", "leap", "kneel", "dwell", "speed"}:
                forms.add(past(lemma))
        else:
            forms.add(past(lemma))
    with open(out_path, "w") as f:
        f.write("# Verb lexicon: lemmas and inflected forms, lowercase, one per line.\n")
        f.write("# Generated by tools/lexicon/make_verb_lexicon.py; %d lemmas.\n" % len(set(LEMMAS)))
        for form in sorted(forms):
            f.write(form + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "core/data/lexicon/verbs.txt")
