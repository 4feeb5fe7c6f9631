"""Generates data/en/rules.json and data/en/lexicon.json.

Run from crates/core: python3 data/tools/gen_en.py
"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "en")

DOUBLING = "bdglmnprt"


def persons(*forms):
    return list(forms)


def regular_verb(ending, p3, ps, pr, pp=None, base=None):
    base = ending if base is None else base
    return {
        "ending": ending,
        "t": {
            "p": [base, base, p3, base, base, base],
            "ps": ps,
            "pp": ps if pp is None else pp,
            "pr": pr,
            "b": base,
            "s": base,
            "ip": [base, base, base],
        },
    }


conjugation = {
    "v1": regular_verb("", "s", "ed", "ing"),
    "v2": regular_verb("e", "es", "ed", "ing"),
    "v3": regular_verb("y", "ies", "ied", "ying"),
    "v4": regular_verb("", "es", "ed", "ing"),
    "v6": regular_verb("", "s", "d", "ing"),
    "v7": regular_verb("ie", "ies", "ied", "ying"),
    "be": {
        "ending": "*",
        "t": {
            "p": ["am", "are", "is", "are", "are", "are"],
            "ps": ["was", "were", "was", "were", "were", "were"],
            "pp": "been",
            "pr": "being",
            "b": "be",
            "s": "be",
            "ip": ["be", "be", "be"],
        },
    },
    "have": {
        "ending": "*",
        "t": {
            "p": ["have", "have", "has", "have", "have", "have"],
            "ps": "had",
            "pp": "had",
            "pr": "having",
            "b": "have",
            "s": "have",
            "ip": ["have", "have", "have"],
        },
    },
    "do": {
        "ending": "*",
        "t": {
            "p": ["do", "do", "does", "do", "do", "do"],
            "ps": "did",
            "pp": "done",
            "pr": "doing",
            "b": "do",
            "s": "do",
            "ip": ["do", "do", "do"],
        },
    },
    # modal auxiliaries: no non-finite forms
    "vmod": {
        "ending": "",
        "t": {
            "p": ["", "", "", "", "", ""],
            "ps": "",
            "pp": None,
            "pr": None,
            "b": None,
            "s": "",
            "ip": [None, None, None],
        },
    },
}
for c in DOUBLING:
    conjugation["v5" + c] = regular_verb(c, c + "s", c + c + "ed", c + c + "ing")

declension = {
    "n1": {"ending": "", "forms": {"s": "", "p": "s"}},
    "n2": {"ending": "", "forms": {"s": "", "p": "es"}},
    "n3": {"ending": "y", "forms": {"s": "y", "p": "ies"}},
    "n4": {"ending": "f", "forms": {"s": "f", "p": "ves"}},
    "n5": {"ending": "fe", "forms": {"s": "fe", "p": "ves"}},
    "n6": {"ending": "", "forms": {"s": "", "p": ""}},
    "a1": {"ending": "", "forms": {"": ""}},
    "a2": {"ending": "", "forms": {"": "", "co": "er", "su": "est"}},
    "a3": {"ending": "e", "forms": {"": "e", "co": "er", "su": "est"}},
    "a4": {"ending": "y", "forms": {"": "y", "co": "ier", "su": "iest"}},
    "inv": {"ending": "", "forms": {"": ""}},
    "d-a": {"ending": "a", "forms": {"s": "a", "p": ""}},
    "d-this": {"ending": "is", "forms": {"s": "is", "p": "ese"}},
    "d-that": {"ending": "at", "forms": {"s": "at", "p": "ose"}},
    "pn-pers": {
        "ending": "*",
        "forms": {
            "1s-nom": "I", "1s-acc": "me", "1s-dat": "me", "1s-refl": "myself", "1s-tonic": "me",
            "2s-nom": "you", "2s-acc": "you", "2s-dat": "you", "2s-refl": "yourself", "2s-tonic": "you",
            "3sm-nom": "he", "3sm-acc": "him", "3sm-dat": "him", "3sm-refl": "himself", "3sm-tonic": "him",
            "3sf-nom": "she", "3sf-acc": "her", "3sf-dat": "her", "3sf-refl": "herself", "3sf-tonic": "her",
            "3sx-nom": "it", "3sx-acc": "it", "3sx-dat": "it", "3sx-refl": "itself", "3sx-tonic": "it",
            "1p-nom": "we", "1p-acc": "us", "1p-dat": "us", "1p-refl": "ourselves", "1p-tonic": "us",
            "2p-nom": "you", "2p-acc": "you", "2p-dat": "you", "2p-refl": "yourselves", "2p-tonic": "you",
            "3p-nom": "they", "3p-acc": "them", "3p-dat": "them", "3p-refl": "themselves", "3p-tonic": "them",
        },
    },
}
for c in DOUBLING:
    declension["a5" + c] = {"ending": c, "forms": {"": c, "co": c + c + "er", "su": c + c + "est"}}

rules = {
    "language": "en",
    "declension": declension,
    "conjugation": conjugation,
    "elision": {"elidable": [], "conditional": {}},
    "euphony": {},
    "contraction": {},
    "anExceptions": {
        # vowel-initial words taking "a"
        "a": ["uni", "use", "usu", "uti", "eu", "one", "once", "ewe", "ura", "uro", "ure", "ubiq"],
        # consonant-initial words taking "an"
        "an": ["hour", "honest", "honor", "honour", "heir"],
    },
    "adjectivePre": [],
}

# ---------------------------------------------------------------- lexicon
lex = {}


def add(lemma, pos, **fields):
    entry = lex.setdefault(lemma, {})
    if pos in entry:
        raise SystemExit("duplicate %s/%s" % (lemma, pos))
    entry[pos] = fields


NOUNS = """
apple orange banana plane parameter world cat dog house car tree book table chair friend
man woman child person boy girl mother father brother sister son daughter king queen
husband wife uncle aunt nephew niece prince princess lady gentleman
city country family student teacher doctor school water food bread cake cheese milk tea
coffee pear lemon grape cherry strawberry peach plum melon potato tomato carrot onion bean
egg rice soup salad meat chicken fish sheep deer mouse goose foot tooth leaf knife life
wolf shelf thief half loaf calf series species aircraft
spring summer autumn winter morning evening night day week month year hour minute second
time moment morning afternoon today history story idea problem question answer reason word
sentence text language letter number name place room door window wall floor roof garden
street road bridge river lake sea ocean mountain hill forest field farm village town island
beach sky sun moon star cloud rain snow wind storm weather fire stone rock sand earth air
box bus church dish glass watch brush class kiss fox tax wish match box bush dress
baby body boy key toy day way monkey valley journey turkey donkey chimney
car bike boat ship train truck taxi ticket station airport hotel restaurant shop market bank
office factory hospital museum library theatre cinema park stadium hall kitchen bedroom
bathroom office computer phone screen keyboard camera radio television clock lamp bed sofa
picture photo piano guitar song music film movie game sport ball team player match race
job work money price cost bill coin card paper pen pencil bag pocket shoe shirt hat coat
dress skirt sock glove ring watch jacket
head face eye ear nose mouth lip hand arm leg knee finger heart blood bone skin hair neck
back shoulder stomach brain voice
animal bird horse cow pig goat rabbit lion tiger bear elephant monkey snake frog duck owl
bee ant butterfly spider fly insect whale shark dolphin
flower grass plant seed root branch wood oak rose
government president minister party law rule right power war peace army soldier police
officer judge court crime prison plan project study research result report test exam
lesson course degree university college subject science art math
company business market customer client manager worker boss staff member group meeting
event party holiday trip travel visit tour guide map
letter message email news newspaper magazine article page chapter title author writer
poet artist singer actor dancer painter musician driver pilot farmer cook baker butcher
engineer lawyer nurse scientist student pupil neighbour guest host stranger enemy
hero echo
example fact detail part piece side end edge top bottom center middle corner line point
shape size color colour form kind sort type level rate speed distance length height weight
age area space step stage
love hate fear hope joy anger pain pleasure dream wish thought mind memory feeling sense
truth lie secret surprise gift present prize chance luck danger risk safety health illness
disease cure medicine drug
morning breakfast lunch dinner meal supper snack dessert sugar salt pepper oil butter honey
juice wine beer drink bottle cup plate bowl spoon fork
system program network software data file record list table chart model method process
service product order delivery package
god church prayer soul spirit angel
land people nation state region area border capital
ice iron gold silver steel glass plastic paper cotton wool silk leather
noise sound silence voice
birthday wedding holiday anniversary festival
"""


EXTRA_NOUNS = """
lexicon verb tense coordination alternative date
account action activity actor address advantage adventure advertisement afternoon agency agent
agreement aim alarm album alphabet ambulance amount analysis ankle answer apartment appeal
appearance appetite application appointment approach argument arrival arrow aspect assistant
atmosphere attack attempt attention attitude audience autumn avenue award balance balloon band
bank bar barn base basket bath battery battle beard beauty beginning behaviour belief bell belt
bench benefit bicycle bill biscuit blade blanket block board bomb bonus border bottle brain
branch brand breath breeze brick bride broom bubble bucket budget building bulb bullet bundle
burden button cabin cabinet cable cage calendar campaign camp canal candle candy cap captain
career carpet cartoon case cash castle cause cave ceiling cell century chain challenge champion
channel character charge charity chart cheek chef chest chin choice circle citizen claim clerk
cliff climate closet club coach coast code collar colleague collection column comfort comment
committee community competition complaint concept concert condition conference confidence
connection contact contest context contract contrast contribution conversation copy cottage
couch council counter couple courage cousin crew crowd crown culture curtain cushion cycle
damage dance deadline debate debt decade decision deck defence demand department deposit
desert design desire desk destination device diary dictionary diet difference dinner direction
director dirt disaster discount discussion display document dollar doll dot dozen draft
dragon drama drawer drawing driver drop drum duck duty eagle economy edition education effect
effort election element elevator emergency emotion employee energy engine entrance envelope
environment episode error essay evening evidence exercise exhibition exit experience expert
explanation expression extent fabric failure fan fashion fault favour feather feature fee
fence fever figure film finger fish flag flame flight flood flour focus fog folder forest fortune
fountain frame freedom friendship fruit fuel fun furniture future gallery gap gate generation
ghost giant glance goal grade grain grandfather grandmother grandson granddaughter grave
gravity ground growth guard guitar gun habit hall hammer handle harbour harvest hat headline
heat heaven hedge helmet highway hobby hole holiday homework honey hook horizon horn host
household hunger hunter hut identity image impact income industry injury ink insect instance
instrument insurance interest interview invention investment invitation jam jar jaw jewel joke
journalist judge jungle jury kettle kid kingdom kite knee knot label laboratory ladder lamb lane
laptop laughter lawn layer leader league lecture legend lesson level lid limit lip liquid
load loan lobby location lock log lord loss lottery luggage machine magic mail mall manner
marriage mask mass master material matter meal meaning measure meeting member membership
menu mess metal method mirror mission mistake mixture mood motor motorcycle mountain mud
muscle mushroom mystery nail napkin needle nerve nest net noodle note notebook novel nut
object occasion offer onion opera operation opinion opportunity option orchestra organization
origin outcome oven owner pack pain pair palace pan panel parent passage passenger passport
password path patient pattern pause payment pearl penalty pension period permission pet phase
philosophy phrase pie pig pile pillow pin pipe pitch pizza planet platform pocket poem poetry
pole policy pond pool population port portrait position post pot powder practice presence
pressure pride priest principle priority prison privacy profession professor profit progress
promise property proposal protest pub pumpkin pupil puzzle quality quantity quarter queue
rabbit radio railway range reaction reader reality receipt recipe reputation request resource
respect response restaurant revenue revolution reward rhythm ribbon rice rival robot rocket
role roof route row rug ruler sailor salary sample sandwich satellite sauce saucer scale scene
schedule scheme scholar score script sculpture season seat secretary section sector security
selection sentence sequence servant session setting shadow shame share shell shelter shock
shoulder shower signal signature silk sink skill skirt slice slope smell smile smoke snack
society soil solution source spirit sponge spot square staff stairs stamp standard statement
statue status steam stem stick stock stomach storage stove strategy stream strength stress
string structure style success suggestion suit suitcase sum supply surface surgeon survey
sweater symbol sympathy table tail talent tank tape target task taste teaspoon technology
teenager telephone temperature temple tendency tennis tent term territory theme theory thread
threat throat thumb thunder tile tissue toast toe toilet tone tongue tool topic towel tower
track trade tradition traffic tragedy trail transport trap tray treasure treatment trend trial
tribe trick trouble tube tunnel turn twin umbrella uniform union unit universe user vacation
valley value van variety vase vegetable vehicle version victim victory video view village
violin vision visitor volume volunteer wage wall wallet warning wave wealth weapon weekend
wheel whisper whistle wing winner wire witness wonder worm wound yard youth zone zoo
"""
EXTRA_VERBS = """
accept accuse adapt adjust admire adopt advise afford aid alter amuse announce apologize
appreciate approve arrange arrest assist assume attract bake balance bathe behave bless boil
bore bounce breathe brush bury calculate camp celebrate challenge charge chase cheat cheer chew
choke chop claim clap coach coil combine comfort command communicate compete complain concern
confess confirm confuse construct contain convince crash crawl credit crush curl cycle dare
decorate defend delight deserve detect disagree disappear disappoint dislike divide double doubt
drag drain dream drown earn educate embarrass encourage enter entertain examine excite excuse
exercise exist expand explode express extend fade fasten fax fetch file float flood flow fold
force found frighten gaze glow glue grate greet grin guarantee guard guide hammer handle harm
heat hook hop hover hug ignore imagine impress increase influence inject injure instruct interest
interrupt introduce invent irritate itch juggle kneel label launch level license lick limit list
load long love2 mate matter memorize milk mourn multiply murder nail name nest number object
observe offend operate organize overflow paddle pause peel perform phone place please plug poke
polish possess practise praise preach precede present preserve press pretend produce program
protect pump puncture purr question queue race radiate realize recognize recommend reflect
regret reign reject rejoice relax rely remove rescue retire rhyme rinse risk roll rot ruin rule
satisfy scare scatter scold scrape scratch screw scribble seal settle shade shave shelter shiver
shock sigh sin sip ski slap slip smash smell smoke sneeze sniff soothe spare spark sparkle spill
spoil spot spray sprout squash squeak squeal squeeze stain stamp stare steer step stir stitch
strap strengthen stretch strip stuff subtract succeed suck supply surround suspect suspend swap
tame tap tease telephone tempt terrify test thaw tick tickle time tip tire tour tow trace trade
transport trap tremble trick trot trouble tumble twist unite unlock unpack vanish wail wander
warm waste wave weigh welcome whine whip whirl whisper whistle wink wipe worry2 wrestle wriggle
x-ray yawn zip zoom
"""

IRREGULAR_PLURAL = {
    "man": "men", "woman": "women", "child": "children", "person": "people", "foot": "feet",
    "tooth": "teeth", "mouse": "mice", "goose": "geese", "gentleman": "gentlemen",
}
NOUN_GENDER = {
    "man": "m", "boy": "m", "father": "m", "brother": "m", "son": "m", "king": "m", "husband": "m",
    "uncle": "m", "nephew": "m", "prince": "m", "gentleman": "m",
    "woman": "f", "girl": "f", "mother": "f", "sister": "f", "daughter": "f", "queen": "f",
    "wife": "f", "aunt": "f", "niece": "f", "princess": "f", "lady": "f",
}
INVARIANT = {"sheep", "fish", "deer", "series", "species", "aircraft", "water", "rice", "milk",
             "money", "news", "information", "music", "bread", "furniture", "advice", "sugar",
             "salt", "oil", "butter", "honey", "health", "weather", "software", "data"}
F_NOUNS = {"leaf", "loaf", "half", "wolf", "shelf", "calf", "thief", "elf", "self"}
FE_NOUNS = {"knife", "wife", "life"}
O_ES = {"potato", "tomato", "hero", "echo"}
VOWELS = "aeiou"


def noun_table(w):
    if w in INVARIANT:
        return "n6"
    if w in F_NOUNS:
        return "n4"
    if w in FE_NOUNS:
        return "n5"
    if w in O_ES:
        return "n2"
    if w.endswith(("s", "x", "z", "ch", "sh")):
        return "n2"
    if w.endswith("y") and w[-2] not in VOWELS:
        return "n3"
    return "n1"


seen = set()
for w in (NOUNS + EXTRA_NOUNS).split():
    if w in seen:
        continue
    seen.add(w)
    fields = {"tab": noun_table(w)}
    if w in NOUN_GENDER:
        fields["g"] = NOUN_GENDER[w]
    if w in IRREGULAR_PLURAL:
        fields["irreg"] = {"p": IRREGULAR_PLURAL[w]}
    add(w, "N", **fields)

IRREGULAR_VERBS = """
arise arose arisen|awake awoke awoken|bear bore borne|beat beat beaten|become became become
begin began begun|bend bent bent|bet bet bet|bind bound bound|bite bit bitten|bleed bled bled
blow blew blown|break broke broken|breed bred bred|bring brought brought|build built built
buy bought bought|catch caught caught|choose chose chosen|cling clung clung|come came come
cost cost cost|creep crept crept|cut cut cut|deal dealt dealt|dig dug dug|draw drew drawn
drink drank drunk|drive drove driven|eat ate eaten|fall fell fallen|feed fed fed|feel felt felt
fight fought fought|find found found|flee fled fled|fly flew flown|forbid forbade forbidden
forget forgot forgotten|forgive forgave forgiven|freeze froze frozen|get got gotten
give gave given|go went gone|grind ground ground|grow grew grown|hang hung hung|hear heard heard
hide hid hidden|hit hit hit|hold held held|hurt hurt hurt|keep kept kept|kneel knelt knelt
know knew known|lay laid laid|lead led led|leave left left|lend lent lent|let let let
lie lay lain|light lit lit|lose lost lost|make made made|mean meant meant|meet met met
pay paid paid|put put put|quit quit quit|read read read|ride rode ridden|ring rang rung
rise rose risen|run ran run|say said said|see saw seen|seek sought sought|sell sold sold
send sent sent|set set set|shake shook shaken|shine shone shone|shoot shot shot|show showed shown
shrink shrank shrunk|shut shut shut|sing sang sung|sink sank sunk|sit sat sat|sleep slept slept
slide slid slid|speak spoke spoken|spend spent spent|spin spun spun|split split split
spread spread spread|spring sprang sprung|stand stood stood|steal stole stolen|stick stuck stuck
sting stung stung|strike struck struck|swear swore sworn|sweep swept swept|swim swam swum
swing swung swung|take took taken|teach taught taught|tear tore torn|tell told told
think thought thought|throw threw thrown|understand understood understood|wake woke woken
wear wore worn|weep wept wept|win won won|wind wound wound|write wrote written
withdraw withdrew withdrawn|undertake undertook undertaken|overcome overcame overcome
upset upset upset|mistake mistook mistaken|bid bid bid|cast cast cast|burst burst burst
shed shed shed|sew sewed sewn|swell swelled swollen|forecast forecast forecast
broadcast broadcast broadcast|hang hung hung|sting stung stung|stink stank stunk|strive strove striven
"""

REGULAR_VERBS = """
love like live move hope dance smile believe change close arrive decide describe use
prepare promise receive remember replace serve share store taste type vote achieve agree
argue cause compare complete continue create damage escape explain? hate improve include
invite joke manage measure notice prove raise reduce refuse release require save solve
suppose surprise tie die lie2 free see2
walk talk work play jump look help open call ask answer want need start finish clean cook
watch wash wish push fix mix miss kiss pass touch catch2 reach search teach2 match
listen learn turn return visit wait paint order enter offer happen follow borrow allow
destroy enjoy obey pray stay delay employ annoy
carry study try cry worry marry hurry copy reply apply deny fry dry identify
stop plan drop shop grab rob admit commit permit prefer refer occur travel
spring2 climb kill fill pull pour rain snow laugh cough attack count point print
accept add appear attach avoid burn check collect connect correct cover cross deliver
depend develop discover dress end expect explain fail fear form gather guess hand hunt
inform insist intend jog kick knock land last lift light2 lock mark melt mention mind
obtain own pack park pick plant post prevent pretend protect provide punish record
relax remain remind repair repeat report request rest rush sail scream seem shout sign
sound spell suffer suggest support switch thank train treat trust visit warn wonder
yell sleep2 fish2 help2 wander gather deliver consider remember water shower
"""

DOUBLE_VERBS = {"stop", "plan", "drop", "shop", "grab", "rob", "admit", "commit", "permit",
                "prefer", "refer", "occur", "travel", "run", "swim", "get", "set", "cut", "put",
                "hit", "sit", "begin", "forget", "win", "shut", "let", "bet", "quit", "spin",
                "split", "upset", "forbid", "dig", "bid", "jog", "beg", "chat", "hug", "nod",
                "rub", "skip", "tap", "wrap", "ban", "fit", "knit", "pat", "plug", "trip"}


def verb_table(w):
    if w in DOUBLE_VERBS and w[-1] in DOUBLING:
        return "v5" + w[-1]
    if w.endswith("ie"):
        return "v7"
    if w.endswith("ee") or w.endswith("ye") or w.endswith("oe"):
        return "v6"
    if w.endswith("e"):
        return "v2"
    if w.endswith("y") and w[-2] not in VOWELS:
        return "v3"
    if w.endswith(("s", "x", "z", "ch", "sh")) or w in ("go", "do"):
        return "v4"
    return "v1"


for item in IRREGULAR_VERBS.replace("\n", "|").split("|"):
    parts = item.split()
    if not parts:
        continue
    lemma, ps, pp = parts
    if lemma in lex and "V" in lex[lemma]:
        continue
    add(lemma, "V", tab=verb_table(lemma), irreg={"ps": ps, "pp": pp})

for w in (REGULAR_VERBS + EXTRA_VERBS).split():
    w = w.rstrip("?").rstrip("2")
    if w in lex and "V" in lex[w]:
        continue
    add(w, "V", tab=verb_table(w))
for w in "beg chat hug nod rub skip tap wrap ban fit knit pat plug trip".split():
    if w in lex and "V" in lex[w]:
        continue
    add(w, "V", tab=verb_table(w))

add("be", "V", tab="be")
add("have", "V", tab="have")
add("do", "V", tab="do")
for m, past in [("can", "could"), ("may", "might"), ("must", "must"), ("will", "would"),
                ("shall", "should")]:
    irreg = {} if past == "" else {"ps": past}
    add(m, "V", tab="vmod", irreg=irreg)

ADJ_SHORT = """tall short long small green fast slow high low old young new cold warm dark light
bright clean clear cheap deep great hard kind loud near poor quick rich soft strong sweet thick
tough weak smart neat calm fresh proud rough sharp short tight bold brief dull firm fair plain
"""
ADJ_E = "wide large nice late safe brave close fine pure rare ripe wise strange true simple gentle"
ADJ_Y = ("happy easy busy early heavy pretty angry funny lucky dirty empty silly tiny ugly lazy "
         "hungry crazy noisy friendly healthy dry")
ADJ_DOUBLE = "big red hot fat sad wet thin fit mad"
ADJ_LONG = """valid absent applicable defective unknown beautiful important interesting expensive difficult dangerous intelligent modern
famous careful popular useful wonderful delicious comfortable different possible necessary
natural orange blue yellow white black brown pink purple grey gray golden wooden electric
excellent favourite favorite perfect terrible horrible special serious public private
international national local general social political economic personal physical final
huge quiet polite honest open ready afraid alive alone right wrong sure certain able
available common normal similar single whole main real free basic chemical complex correct
curious elegant enormous familiar fantastic foreign formal global visible invisible
"""
ADJ_IRREG = {"good": ("better", "best"), "bad": ("worse", "worst"), "far": ("farther", "farthest"),
             "little": ("less", "least"), "many": ("more", "most"), "much": ("more", "most")}


def add_adj(w, tab, irreg=None):
    if w in lex and "A" in lex[w]:
        return
    fields = {"tab": tab}
    if irreg:
        fields["irreg"] = irreg
    add(w, "A", **fields)


for w in ADJ_SHORT.split():
    add_adj(w, "a2")
for w in ADJ_E.split():
    add_adj(w, "a3")
for w in ADJ_Y.split():
    add_adj(w, "a4")
for w in ADJ_DOUBLE.split():
    add_adj(w, "a5" + w[-1])
for w in ADJ_LONG.split():
    add_adj(w, "a1")
for w, (co, su) in ADJ_IRREG.items():
    add_adj(w, "a1", {"co": co, "su": su})
# "free" ends with "ee": free/freer/freest
add_adj("free", "a2")

ADVERBS = """now then here there today tomorrow yesterday always never often sometimes usually
very quite too also already still soon again not fast hard quickly slowly carefully happily
really almost only just even perhaps maybe together away back ever once twice later early late
long so yet rather enough everywhere somewhere anywhere nowhere inside outside upstairs
downstairs abroad home indeed finally quietly suddenly easily badly certainly clearly exactly
probably simply rarely seldom recently immediately nearly hardly where when why how well
"""
for w in ADVERBS.split():
    if w in lex and "Adv" in lex[w]:
        continue
    irreg = {"co": "better", "su": "best"} if w == "well" else None
    fields = {"tab": "inv"}
    if irreg:
        fields["irreg"] = irreg
    add(w, "Adv", **fields)

PREPS = """to by in on at of for with from into onto about after before during under over between
among through without against behind beside near since until toward towards across along around
above below beyond up down off like per within upon throughout than"""
for w in PREPS.split():
    if w in lex and "P" in lex[w]:
        continue
    add(w, "P", tab="inv")

CONJ = "and or but nor so yet because if when while although though that whether unless as than"
for w in CONJ.split():
    add(w, "C", tab="inv")

# determiners
add("a", "D", tab="d-a")
add("this", "D", tab="d-this")
add("that", "D", tab="d-that")
for w in "the some any no every each all both my your his her its our their which what another".split():
    add(w, "D", tab="inv")

# personal pronouns: inherent person/number/gender and default case
PERS = [("I", "1", "s", None, "nom"), ("me", "1", "s", None, "acc"), ("you", "2", "s", None, "nom"),
        ("he", "3", "s", "m", "nom"), ("him", "3", "s", "m", "acc"), ("she", "3", "s", "f", "nom"),
        ("her", "3", "s", "f", "acc"), ("it", "3", "s", "x", "nom"), ("we", "1", "p", None, "nom"),
        ("us", "1", "p", None, "acc"), ("they", "3", "p", None, "nom"), ("them", "3", "p", None, "acc"),
        ("myself", "1", "s", None, "refl"), ("himself", "3", "s", "m", "refl"),
        ("herself", "3", "s", "f", "refl"), ("itself", "3", "s", "x", "refl"),
        ("themselves", "3", "p", None, "refl")]
for lemma, pe, n, g, c in PERS:
    fields = {"tab": "pn-pers", "pe": int(pe), "n": n, "c": c}
    if g:
        fields["g"] = g
    add(lemma, "Pro", **fields)
add("this", "Pro", tab="d-this")
add("that", "Pro", tab="d-that")
for w in "who whom what which whose someone something anyone anything everyone everything nobody nothing somebody everybody one".split():
    add(w, "Pro", tab="inv")

os.makedirs(OUT, exist_ok=True)
with open(os.path.join(OUT, "rules.json"), "w", encoding="utf-8") as f:
    json.dump(rules, f, ensure_ascii=False, indent=1)
with open(os.path.join(OUT, "lexicon.json"), "w", encoding="utf-8") as f:
    f.write("{\n" + ",\n".join(json.dumps(k, ensure_ascii=False) + ": " + json.dumps(lex[k], ensure_ascii=False, sort_keys=True) for k in sorted(lex)) + "\n}\n")
count = sum(len(v) for v in lex.values())
print("en entries:", count)
