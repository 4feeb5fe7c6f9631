"""Generates data/fr/rules.json and data/fr/lexicon.json.

Run from crates/core: python3 data/tools/gen_fr.py
"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "fr")


def w(s):
    return s.split()


def table(ending, p, i, ps, f, c, s, si, ip, pr, pp, b):
    return {
        "ending": ending,
        "t": {
            "p": w(p) if isinstance(p, str) else p,
            "i": w(i),
            "ps": w(ps),
            "f": w(f),
            "c": w(c),
            "s": w(s),
            "si": w(si),
            "ip": w(ip) if isinstance(ip, str) else ip,
            "pr": pr,
            "pp": pp,
            "b": b,
        },
    }


def imperfect(st):
    return " ".join(st + x for x in ["ais", "ais", "ait", "ions", "iez", "aient"])


def future(st):
    return " ".join(st + x for x in ["ai", "as", "a", "ons", "ez", "ont"])


def conditional(st):
    return " ".join(st + x for x in ["ais", "ais", "ait", "ions", "iez", "aient"])


def ps_i(st):
    return " ".join(st + x for x in ["is", "is", "it", "îmes", "îtes", "irent"])


def ps_u(st):
    return " ".join(st + x for x in ["us", "us", "ut", "ûmes", "ûtes", "urent"])


def si_i(st):
    return " ".join(st + x for x in ["isse", "isses", "ît", "issions", "issiez", "issent"])


def si_u(st):
    return " ".join(st + x for x in ["usse", "usses", "ût", "ussions", "ussiez", "ussent"])


def subj(st3p, st1p=None):
    st1p = st3p if st1p is None else st1p
    return "%se %ses %se %sions %siez %sent" % (st3p, st3p, st3p, st1p, st1p, st3p)


conj = {}

# first group, with the spelling variants applied to the stem-final letters
ER_P = ["e", "es", "e", "ons", "ez", "ent"]
ER_I = ["ais", "ais", "ait", "ions", "iez", "aient"]
ER_PS = ["ai", "as", "a", "âmes", "âtes", "èrent"]
ER_F = ["erai", "eras", "era", "erons", "erez", "eront"]
ER_C = ["erais", "erais", "erait", "erions", "eriez", "eraient"]
ER_S = ["e", "es", "e", "ions", "iez", "ent"]
ER_SI = ["asse", "asses", "ât", "assions", "assiez", "assent"]
ER_IP = ["e", "ons", "ez"]
MUTE_P = [True, True, True, False, False, True]
MUTE_IP = [True, False, False]


def er_variant(ending, strong, weak, soft=None, future_strong=True):
    """strong: stem tail before a mute e; weak: elsewhere; soft: before a/o."""
    soft = weak if soft is None else soft

    def pick(suffix, mute):
        if mute:
            return strong + suffix
        if suffix[0] in "aoâ":
            return soft + suffix
        return weak + suffix

    fut = strong if future_strong else weak
    return {
        "ending": ending,
        "t": {
            "p": [pick(x, m) for x, m in zip(ER_P, MUTE_P)],
            "i": [pick(x, False) for x in ER_I],
            "ps": [pick(x, False) if x != "èrent" else weak + x for x in ER_PS],
            "f": [fut + x for x in ER_F],
            "c": [fut + x for x in ER_C],
            "s": [pick(x, m) for x, m in zip(ER_S, MUTE_P)],
            "si": [pick(x, False) for x in ER_SI],
            "ip": [pick(x, m) for x, m in zip(ER_IP, MUTE_IP)],
            "pr": pick("ant", False),
            "pp": weak + "é",
            "b": weak + "er",
        },
    }


conj["v-er"] = er_variant("er", "", "")
conj["v-ger"] = er_variant("ger", "g", "g", "ge")
conj["v-cer"] = er_variant("cer", "c", "c", "ç")
conj["v-yer"] = er_variant("yer", "i", "y")
for cons in ["v", "n", "t", "s", "m", "l", "r", "vr"]:
    conj["v-e%ser" % cons] = er_variant("e%ser" % cons, "è" + cons, "e" + cons)
for cons in ["r", "t", "d", "l", "ch", "br", "g", "n", "gn", "tr"]:
    if cons == "g":
        v = er_variant("éger", "èg", "ég", "ége", future_strong=False)
    else:
        v = er_variant("é%ser" % cons, "è" + cons, "é" + cons, future_strong=False)
    conj["v-é%ser" % cons] = v
conj["v-ell"] = er_variant("ler", "ll", "l")
conj["v-ett"] = er_variant("ter", "tt", "t")

conj["v-ir"] = table("ir", "is is it issons issez issent", imperfect("iss"), ps_i(""),
                     future("ir"), conditional("ir"), subj("iss"),
                     si_i(""), "is issons issez", "issant", "i", "ir")
conj["v-re"] = table("re", ["s", "s", "", "ons", "ez", "ent"], imperfect(""), ps_i(""),
                     future("r"), conditional("r"), subj(""), si_i(""), "s ons ez", "ant", "u", "re")
conj["être"] = table("être", "suis es est sommes êtes sont", imperfect("ét"),
                     "fus fus fut fûmes fûtes furent", future("ser"), conditional("ser"),
                     "sois sois soit soyons soyez soient", si_u("f"), "sois soyons soyez",
                     "étant", "été", "être")
conj["avoir"] = table("avoir", "ai as a avons avez ont", imperfect("av"), ps_u("e"),
                      future("aur"), conditional("aur"), "aie aies ait ayons ayez aient",
                      si_u("e"), "aie ayons ayez", "ayant", "eu", "avoir")
conj["aller"] = table("aller", "vais vas va allons allez vont", imperfect("all"),
                      "allai allas alla allâmes allâtes allèrent", future("ir"), conditional("ir"),
                      "aille ailles aille allions alliez aillent",
                      "allasse allasses allât allassions allassiez allassent",
                      "va allons allez", "allant", "allé", "aller")
conj["faire"] = table("faire", "fais fais fait faisons faites font", imperfect("fais"), ps_i("f"),
                      future("fer"), conditional("fer"), subj("fass"), si_i("f"),
                      "fais faisons faites", "faisant", "fait", "faire")
conj["dire"] = table("dire", "dis dis dit disons dites disent", imperfect("dis"), ps_i("d"),
                     future("dir"), conditional("dir"), subj("dis"), si_i("d"),
                     "dis disons dites", "disant", "dit", "dire")
conj["pouvoir"] = table("pouvoir", "peux peux peut pouvons pouvez peuvent", imperfect("pouv"),
                        ps_u("p"), future("pourr"), conditional("pourr"), subj("puiss"),
                        si_u("p"), [None, None, None], "pouvant", "pu", "pouvoir")
conj["vouloir"] = table("vouloir", "veux veux veut voulons voulez veulent", imperfect("voul"),
                        ps_u("voul"), future("voudr"), conditional("voudr"),
                        subj("veuill", "voul"), si_u("voul"), "veuille veuillons veuillez",
                        "voulant", "voulu", "vouloir")
conj["devoir"] = table("devoir", "dois dois doit devons devez doivent", imperfect("dev"),
                       "dus dus dut dûmes dûtes durent", future("devr"), conditional("devr"),
                       subj("doiv", "dev"), "dusse dusses dût dussions dussiez dussent",
                       "dois devons devez", "devant", ["dû", "due", "dus", "dues"], "devoir")
conj["savoir"] = table("savoir", "sais sais sait savons savez savent", imperfect("sav"),
                       ps_u("s"), future("saur"), conditional("saur"), subj("sach"), si_u("s"),
                       "sache sachons sachez", "sachant", "su", "savoir")
conj["v-enir"] = table("enir", "iens iens ient enons enez iennent", imperfect("en"),
                       "ins ins int înmes întes inrent", future("iendr"), conditional("iendr"),
                       subj("ienn", "en"), "insse insses înt inssions inssiez inssent",
                       "iens enons enez", "enant", "enu", "enir")
conj["v-prendre"] = table("prendre", "prends prends prend prenons prenez prennent",
                          imperfect("pren"), ps_i("pr"), future("prendr"), conditional("prendr"),
                          subj("prenn", "pren"), si_i("pr"), "prends prenons prenez",
                          "prenant", "pris", "prendre")
conj["v-mettre"] = table("mettre", "mets mets met mettons mettez mettent", imperfect("mett"),
                         ps_i("m"), future("mettr"), conditional("mettr"), subj("mett"),
                         si_i("m"), "mets mettons mettez", "mettant", "mis", "mettre")
conj["v-voir"] = table("voir", "vois vois voit voyons voyez voient", imperfect("voy"),
                       ps_i("v"), future("verr"), conditional("verr"), subj("voi", "voy"),
                       si_i("v"), "vois voyons voyez", "voyant", "vu", "voir")
conj["croire"] = table("croire", "crois crois croit croyons croyez croient", imperfect("croy"),
                       ps_u("cr"), future("croir"), conditional("croir"), subj("croi", "croy"),
                       si_u("cr"), "crois croyons croyez", "croyant", "cru", "croire")
for cons in ["t", "m", "v"]:
    conj["v-%sir" % cons] = table(
        cons + "ir", ["s", "s", "t", cons + "ons", cons + "ez", cons + "ent"], imperfect(cons),
        ps_i(cons), future(cons + "ir"), conditional(cons + "ir"), subj(cons), si_i(cons),
        ["s", cons + "ons", cons + "ez"], cons + "ant", cons + "i", cons + "ir")
conj["v-rir"] = table("rir", "re res re rons rez rent", imperfect("r"), ps_i("r"),
                      future("rir"), conditional("rir"), subj("r"), si_i("r"), "re rons rez",
                      "rant", "ert", "rir")
conj["lire"] = table("lire", "lis lis lit lisons lisez lisent", imperfect("lis"), ps_u("l"),
                     future("lir"), conditional("lir"), subj("lis"), si_u("l"),
                     "lis lisons lisez", "lisant", "lu", "lire")
conj["v-crire"] = table("crire", "cris cris crit crivons crivez crivent", imperfect("criv"),
                        ps_i("criv"), future("crir"), conditional("crir"), subj("criv"),
                        si_i("criv"), "cris crivons crivez", "crivant", "crit", "crire")
conj["boire"] = table("boire", "bois bois boit buvons buvez boivent", imperfect("buv"),
                      ps_u("b"), future("boir"), conditional("boir"), subj("boiv", "buv"),
                      si_u("b"), "bois buvons buvez", "buvant", "bu", "boire")
conj["v-aître"] = table("aître", "ais ais aît aissons aissez aissent", imperfect("aiss"),
                        ps_u(""), future("aîtr"), conditional("aîtr"), subj("aiss"), si_u(""),
                        "ais aissons aissez", "aissant", "u", "aître")
conj["vivre"] = table("vivre", "vis vis vit vivons vivez vivent", imperfect("viv"),
                      ps_u("véc"), future("vivr"), conditional("vivr"), subj("viv"),
                      si_u("véc"), "vis vivons vivez", "vivant", "vécu", "vivre")
conj["suivre"] = table("suivre", "suis suis suit suivons suivez suivent", imperfect("suiv"),
                       ps_i("suiv"), future("suivr"), conditional("suivr"), subj("suiv"),
                       si_i("suiv"), "suis suivons suivez", "suivant", "suivi", "suivre")
conj["v-cevoir"] = table("cevoir", "çois çois çoit cevons cevez çoivent", imperfect("cev"),
                         ps_u("ç"), future("cevr"), conditional("cevr"), subj("çoiv", "cev"),
                         si_u("ç"), "çois cevons cevez", "cevant", "çu", "cevoir")
conj["v-courir"] = table("courir", "cours cours court courons courez courent",
                         imperfect("cour"), ps_u("cour"), future("courr"), conditional("courr"),
                         subj("cour"), si_u("cour"), "cours courons courez", "courant", "couru",
                         "courir")
conj["mourir"] = table("mourir", "meurs meurs meurt mourons mourez meurent", imperfect("mour"),
                       ps_u("mour"), future("mourr"), conditional("mourr"), subj("meur", "mour"),
                       si_u("mour"), "meurs mourons mourez", "mourant", "mort", "mourir")
conj["naître"] = table("naître", "nais nais naît naissons naissez naissent", imperfect("naiss"),
                       ps_i("naqu"), future("naîtr"), conditional("naîtr"), subj("naiss"),
                       si_i("naqu"), "nais naissons naissez", "naissant", "né", "naître")
conj["v-rire"] = table("rire", "ris ris rit rions riez rient", imperfect("ri"), ps_i("r"),
                       future("rir"), conditional("rir"), subj("ri"), si_i("r"), "ris rions riez",
                       "riant", "ri", "rire")
conj["v-uire"] = table("uire", "uis uis uit uisons uisez uisent", imperfect("uis"),
                       ps_i("uis"), future("uir"), conditional("uir"), subj("uis"), si_i("uis"),
                       "uis uisons uisez", "uisant", "uit", "uire")
conj["v-indre"] = table("indre", "ins ins int ignons ignez ignent", imperfect("ign"),
                        ps_i("ign"), future("indr"), conditional("indr"), subj("ign"),
                        si_i("ign"), "ins ignons ignez", "ignant", "int", "indre")
conj["v-plaire"] = table("plaire", "plais plais plaît plaisons plaisez plaisent",
                         imperfect("plais"), ps_u("pl"), future("plair"), conditional("plair"),
                         subj("plais"), si_u("pl"), "plais plaisons plaisez", "plaisant", "plu",
                         "plaire")
conj["v-battre"] = table("battre", "bats bats bat battons battez battent", imperfect("batt"),
                         ps_i("batt"), future("battr"), conditional("battr"), subj("batt"),
                         si_i("batt"), "bats battons battez", "battant", "battu", "battre")
conj["v-voyer"] = table("voyer", "voie voies voie voyons voyez voient", imperfect("voy"),
                        "voyai voyas voya voyâmes voyâtes voyèrent", future("verr"),
                        conditional("verr"), subj("voi", "voy"),
                        "voyasse voyasses voyât voyassions voyassiez voyassent",
                        "voie voyons voyez", "voyant", "voyé", "voyer")


def impersonal(ending, p3, i3, ps3, f3, c3, s3, si3, pr, pp, b):
    def only3(x):
        return [None, None, x, None, None, None]

    return {"ending": ending, "t": {"p": only3(p3), "i": only3(i3), "ps": only3(ps3),
                                    "f": only3(f3), "c": only3(c3), "s": only3(s3),
                                    "si": only3(si3), "ip": [None, None, None], "pr": pr,
                                    "pp": pp, "b": b}}


conj["falloir"] = impersonal("falloir", "faut", "fallait", "fallut", "faudra", "faudrait",
                             "faille", "fallût", None, "fallu", "falloir")
conj["pleuvoir"] = impersonal("pleuvoir", "pleut", "pleuvait", "plut", "pleuvra", "pleuvrait",
                              "pleuve", "plût", "pleuvant", "plu", "pleuvoir")


def g4(ending, ms, fs, mp, fp):
    return {"ending": ending, "forms": {"ms": ms, "fs": fs, "mp": mp, "fp": fp}}


def n2(ending, s, p):
    return {"ending": ending, "forms": {"s": s, "p": p}}


decl = {
    "n-1": n2("", "", "s"),
    "n-x": n2("", "", "x"),
    "n-inv": n2("", "", ""),
    "n-al": n2("al", "al", "aux"),
    "n-ail": n2("ail", "ail", "aux"),
    "n-e": g4("", "", "e", "s", "es"),
    "n-eur": g4("eur", "eur", "euse", "eurs", "euses"),
    "n-teur": g4("teur", "teur", "trice", "teurs", "trices"),
    "n-n": g4("n", "n", "nne", "ns", "nnes"),
    "n-er": g4("er", "er", "ère", "ers", "ères"),
    "a-1": g4("", "", "e", "s", "es"),
    "a-e": g4("e", "e", "e", "es", "es"),
    "a-s": g4("", "", "e", "", "es"),
    "a-s2": g4("s", "s", "sse", "s", "sses"),
    "a-eux": g4("eux", "eux", "euse", "eux", "euses"),
    "a-f": g4("f", "f", "ve", "fs", "ves"),
    "a-l": g4("l", "l", "lle", "ls", "lles"),
    "a-n": g4("n", "n", "nne", "ns", "nnes"),
    "a-er": g4("er", "er", "ère", "ers", "ères"),
    "a-al": g4("al", "al", "ale", "aux", "ales"),
    "a-et": g4("et", "et", "ette", "ets", "ettes"),
    "a-et2": g4("et", "et", "ète", "ets", "ètes"),
    "a-eau": g4("eau", "eau", "elle", "eaux", "elles"),
    "a-c": g4("c", "c", "che", "cs", "ches"),
    "a-g": g4("g", "g", "gue", "gs", "gues"),
    "a-ou": g4("ou", "ou", "olle", "ous", "olles"),
    "a-ieux": g4("ieux", "ieux", "ieille", "ieux", "ieilles"),
    "a-inv": g4("", "", "", "", ""),
    "a-x": g4("x", "x", "se", "x", "ses"),
    "a-ux": g4("ux", "ux", "uce", "ux", "uces"),
    "a-aux": g4("aux", "aux", "ausse", "aux", "ausses"),
    "inv": {"ending": "", "forms": {"": ""}},
    "d-le": g4("le", "le", "la", "les", "les"),
    "d-un": g4("un", "un", "une", "des", "des"),
    "d-ce": g4("ce", "ce", "cette", "ces", "ces"),
    "d-on": g4("on", "on", "a", "es", "es"),
    "d-re": g4("re", "re", "re", "s", "s"),
    "d-tout": g4("out", "out", "oute", "ous", "outes"),
    "d-el": g4("el", "el", "elle", "els", "elles"),
    "d-1": g4("", "", "e", "s", "es"),
    "d-que": g4("e", "e", "e", "es", "es"),
    "d-leur": g4("", "", "", "s", "s"),
    "pn-pers": {
        "ending": "*",
        "forms": {
            "1s-nom": "je", "1s-acc": "me", "1s-dat": "me", "1s-refl": "me", "1s-tonic": "moi",
            "2s-nom": "tu", "2s-acc": "te", "2s-dat": "te", "2s-refl": "te", "2s-tonic": "toi",
            "3sm-nom": "il", "3sm-acc": "le", "3sm-dat": "lui", "3sm-refl": "se", "3sm-tonic": "lui",
            "3sf-nom": "elle", "3sf-acc": "la", "3sf-dat": "lui", "3sf-refl": "se", "3sf-tonic": "elle",
            "1p-nom": "nous", "1p-acc": "nous", "1p-dat": "nous", "1p-refl": "nous", "1p-tonic": "nous",
            "2p-nom": "vous", "2p-acc": "vous", "2p-dat": "vous", "2p-refl": "vous", "2p-tonic": "vous",
            "3pm-nom": "ils", "3pm-acc": "les", "3pm-dat": "leur", "3pm-refl": "se", "3pm-tonic": "eux",
            "3pf-nom": "elles", "3pf-acc": "les", "3pf-dat": "leur", "3pf-refl": "se", "3pf-tonic": "elles",
        },
    },
}

rules = {
    "language": "fr",
    "declension": decl,
    "conjugation": conj,
    "elision": {
        "elidable": ["le", "la", "ce", "se", "me", "te", "je", "ne", "de", "que", "puisque",
                     "lorsque", "jusque", "quoique"],
        "conditional": {"si": ["il", "ils"]},
    },
    "euphony": {"beau": "bel", "fou": "fol", "vieux": "vieil", "nouveau": "nouvel", "mou": "mol",
                "ce": "cet", "ma": "mon", "ta": "ton", "sa": "son"},
    "contraction": {"de le": "du", "de les": "des", "à le": "au", "à les": "aux",
                    "si il": "s'il", "si ils": "s'ils"},
    "anExceptions": {"a": [], "an": []},
    "adjectivePre": ["beau", "bon", "grand", "gros", "jeune", "joli", "long", "mauvais",
                     "nouveau", "petit", "vieux"],
}

# ---------------------------------------------------------------- lexicon
lex = {}


def add(lemma, pos, **fields):
    entry = lex.setdefault(lemma, {})
    if pos in entry:
        return
    entry[pos] = fields


NOUNS_M = """
trait lexique
monde arbre homme garçon père frère fils oncle neveu roi prince ami livre chat chien cheval
jour matin soir midi mois an année? temps moment hiver été automne printemps siècle
pays village quartier chemin pont fleuve lac océan mont bois champ jardin parc
pain fromage lait thé café vin gâteau fruit légume poisson poulet œuf riz sucre sel beurre
repas déjeuner dîner petit-déjeuner dessert
bras pied doigt cou dos ventre genou œil nez cœur sang os visage cheveu front
avion train bateau vélo camion taxi métro bus billet aéroport hôtel restaurant magasin
marché bureau hôpital musée cinéma théâtre stade château immeuble appartement
ordinateur téléphone écran clavier livre cahier stylo crayon papier sac journal magazine
film jeu sport ballon match joueur chanteur acteur médecin professeur étudiant élève
travail métier emploi salaire prix argent compte
chapeau manteau pantalon pull costume soulier gant
animal oiseau lion tigre ours éléphant singe serpent mouton cochon lapin loup renard canard
insecte papillon poisson requin dauphin
problème système programme projet rapport résultat exemple sujet texte mot nom verbe
message courriel article chapitre titre auteur poème roman conte
gouvernement président ministre parti droit pouvoir état peuple citoyen soldat policier
juge tribunal crime
voyage séjour congé week-end anniversaire mariage cadeau
feu vent nuage soleil ciel orage brouillard froid chaud
bruit son silence cri chant
bonheur malheur amour espoir rêve souvenir plaisir désir courage
enfant élève journaliste artiste touriste collègue secrétaire camarade
vendeur danseur directeur lecteur musicien pharmacien boulanger fermier infirmier
ouvrier cuisinier étranger voisin cousin client marchand avocat employé
objet outil instrument meuble lit fauteuil tapis miroir rideau plafond mur toit escalier
couloir salon grenier jardin garage
fleuve lieu milieu détail bijou caillou chou hibou pneu bal festival carnaval
hôtel hiver habitant hôpital horizon hommage honneur hélicoptère
héros hibou hasard haricot hall hamster hangar handicap hamac hameau hareng hockey homard
houx hublot hurlement
paramètre
"""
NOUNS_F = """
position option coordination alternative
pomme fille femme mère sœur tante nièce reine princesse amie poire orange banane cerise
fraise pêche prune tomate carotte pomme-de-terre salade soupe viande
maison ville rue route place campagne montagne colline forêt rivière plage mer île
voiture gare école université bibliothèque église boutique banque usine
table chaise porte fenêtre chambre cuisine salle lampe horloge armoire
main tête jambe bouche oreille dent épaule joue peau voix
semaine journée soirée nuit heure minute seconde saison date année
chanson musique danse peinture photo image histoire langue phrase lettre question réponse
idée raison vérité chose affaire façon manière fois partie
famille personne gens? classe leçon note
robe jupe chemise veste chaussure chaussette cravate
vache chèvre poule souris araignée abeille fourmi baleine
pluie neige glace tempête lumière ombre chaleur
joie peur colère tristesse surprise fête vacances? nouvelle
télévision radio radio-cassette? machine lettre carte photo clé
eau huile herbe heure histoire habitude humeur hirondelle huître
hache honte hauteur hanche harpe hâte haie haine hotte hutte
table nation région frontière capitale guerre paix loi armée police
entreprise société équipe réunion fin
"""

INV_S = lambda x: x.endswith(("s", "x", "z"))
X_PLURAL = {"bijou", "caillou", "chou", "genou", "hibou", "joujou", "pou"}
AL_S = {"bal", "festival", "carnaval", "récital"}
H_ASPIRE = {"héros", "hibou", "hasard", "haricot", "hall", "hamster", "hangar", "handicap",
            "hamac", "hameau", "hareng", "hockey", "homard", "houx", "hublot", "hurlement",
            "hache", "honte", "hauteur", "hanche", "harpe", "hâte", "haie", "haine", "hotte",
            "hutte", "haut", "hardi", "hideux", "honteux"}
VARIABLE = {
    "ami": "n-e", "cousin": "n-e", "voisin": "n-e", "étudiant": "n-e", "avocat": "n-e",
    "employé": "n-e", "client": "n-e", "marchand": "n-e",
    "chanteur": "n-eur", "vendeur": "n-eur", "danseur": "n-eur",
    "acteur": "n-teur", "directeur": "n-teur", "lecteur": "n-teur",
    "musicien": "n-n", "pharmacien": "n-n", "chien": "n-n", "lion": "n-n",
    "boulanger": "n-er", "fermier": "n-er", "infirmier": "n-er", "ouvrier": "n-er",
    "cuisinier": "n-er", "étranger": "n-er",
}
EPICENE = {"enfant", "élève", "journaliste", "artiste", "touriste", "collègue", "secrétaire",
           "camarade", "personne"}
IRREG_N = {"œil": {"p": "yeux"}, "ciel": {"p": "cieux"}, "travail": {"p": "travaux"}}


def noun_table(n):
    if n in VARIABLE:
        return VARIABLE[n]
    if INV_S(n):
        return "n-inv"
    if n in X_PLURAL or n.endswith(("eau", "au")) or (n.endswith("eu") and n != "pneu"):
        return "n-x"
    if n.endswith("al") and n not in AL_S:
        return "n-al"
    return "n-1"


def add_noun(n, g):
    fields = {"tab": noun_table(n), "g": "x" if (n in VARIABLE or n in EPICENE) and n != "personne" else g}
    if n in H_ASPIRE:
        fields["h"] = True
    if n in IRREG_N:
        fields["irreg"] = IRREG_N[n]
    if n == "amie":
        return
    add(n, "N", **fields)


for n in NOUNS_M.split():
    if "?" in n:
        continue
    add_noun(n, "m")
for n in NOUNS_F.split():
    if "?" in n:
        continue
    add_noun(n, "f")
# pluralia tantum
add("gens", "N", tab="n-inv", g="m", n="p")
add("vacances", "N", tab="n-inv", g="f", n="p")
add("année", "N", tab="n-1", g="f")

EXTRA_M = """
accident accord achat acte adulte âge an appareil argument arrêt aspect assiette? atelier
avantage avenir avis bain balcon banc bâtiment besoin bébé beurre bord bout bouton budget
cadre calme camp canal candidat caractère carré carton centre cercle chef chiffre choix
cinéma climat coin colis commerce compte concert concours conseil contrat corps côté
coup couteau cours cri cuir danger début degré départ dessin devoir dictionnaire dieu
dimanche lundi mardi mercredi jeudi vendredi samedi discours documentaire doute drapeau
effet effort endroit ennemi ensemble entretien environnement équipement escalier espace
esprit essai étage été événement examen excès exercice fait fauteuil fer feuilleton fil
filet fond format foyer fruit futur genre geste goût groupe guide habit hasard? immeuble
incendie individu intérêt jardinier jeudi journal juin juillet janvier février mars avril
mai août septembre octobre novembre décembre lavabo lieu linge lit litre local logement
loisir lycée mal manque marché matériel mécanicien membre mensonge menu mètre meurtre
midi modèle moteur mouvement moyen mur niveau nombre numéro objectif océan oncle orchestre
ordre parapluie parent parfum passage passé passeport patron paysage peintre permis
personnage piano pique-nique placard plat plan plancher plateau pneu poids point poste
pot pouce poumon prénom principe printemps produit progrès propriétaire public quai
rang rayon récit refus regard régime remède rendez-vous repos reste retard retour réseau
rire risque rôle rocher rythme sable salon sapin savon secret sens sentiment service
signe singe site soldat sol sommet sort sourire spectacle stylo succès sud nord est ouest
symbole tableau talent tarif taux témoin terrain thème ticket timbre tissu titre tour
tournoi trafic train trajet transport trésor trou tunnel type univers usage vase véhicule
verre vêtement vide village visiteur vol volume vote wagon yaourt zoo
"""
EXTRA_F = """
absence action activité adresse aide air? allée ambiance amitié analyse annonce apparence
arme arrivée assiette attente attention auberge autoroute avance aventure baignoire balle
bande barbe base bataille batterie beauté bête bière blague boisson boîte bouche bougie
boulangerie bouteille branche brosse bulle cabine caisse caméra campagne cantine capacité
carrière case cause cave ceinture cérémonie chaîne chance chapelle charge chasse chatte
cheminée chute cigarette circulation cité clientèle colonne commande commune compagnie
condition confiance connaissance conscience construction conversation copie corde côte
couleur coupe cour course crème crise croix culture curiosité décision découverte défense
demande dent? différence difficulté dimension direction discussion distance douche douleur
durée économie écriture éducation élection émission énergie enfance enquête entrée envie
épaule? époque erreur espèce étape étoile étude expérience explication exposition façade
faculté faim fatigue faute femme? fenêtre? ferme fête? feuille fièvre figure file fin? flamme
fleur foire fonction fontaine forme formule fortune fourchette fumée galerie gorge goutte
grève grille guitare habitude? histoire? hypothèse identité île? image? imagination industrie
information intention invitation jeunesse joie? langue? lecture légende liberté ligne liste
livraison location lune lunette machine? magie maladie marche marque masse matière médaille
médecine mémoire menace méthode mode montre moto mouche nature neige? note? nourriture
obligation occasion odeur offre opinion opération orange? ordonnance organisation origine
page paire parole participation passion pâte patience pause pensée pente période perte
pièce pierre piscine piste plainte planète plante plaque plume poche poésie poitrine
politique pollution population porte? possibilité poste? poubelle poudre préparation
présence pression preuve prière prison production promenade propriété protection province
qualité quantité queue radio? recette recherche réduction règle relation religion
réponse? réservation résistance révolution richesse rose route? rue? sagesse salle? santé
sauce science scène sécurité sensation série serviette situation société? solution somme
sortie soupe? source sorte souris? stratégie structure suite surface table? tâche taille
tasse technique température tendance tente terre tête? théorie tour? tradition tranche
tristesse? trousse valeur valise vallée vague vapeur vente version victoire vie vitesse
vitrine voie voile volonté vue zone
"""
for n in EXTRA_M.split():
    if "?" not in n:
        add_noun(n, "m")
for n in EXTRA_F.split():
    if "?" not in n:
        add_noun(n, "f")

# verbs: (lemma, table, aux)
ETRE_VERBS = {"aller", "venir", "arriver", "partir", "entrer", "sortir", "monter", "descendre",
              "naître", "mourir", "rester", "tomber", "retourner", "devenir", "revenir",
              "rentrer", "parvenir", "intervenir"}

ER_VERBS = """
donner aimer parler manger chanter danser marcher jouer travailler regarder écouter trouver
penser demander arriver entrer rester tomber monter retourner rentrer passer porter montrer
chercher laisser garder habiter aider apporter coûter couper cuisiner déjeuner dîner
dessiner écouter étudier expliquer fermer gagner goûter inviter laver oublier pleurer
préparer quitter raconter refuser rencontrer réparer rêver saluer sauter sembler signer
tourner tomber toucher visiter voler voyager nager changer bouger ranger partager corriger
nager plonger mélanger juger loger obliger encourager charger commencer placer lancer
avancer annoncer prononcer remplacer menacer effacer renoncer payer essayer nettoyer
employer envoyer? appuyer ennuyer tutoyer aboyer acheter lever mener amener emmener
promener peser semer geler appeler rappeler jeter rejeter préférer espérer répéter céder
compléter sécher révéler célébrer protéger posséder accepter accompagner accrocher accuser
admirer adorer affirmer ajouter allumer améliorer amuser apprécier approcher arrêter
arroser assurer attacher attraper augmenter baisser bavarder blesser briller brûler cacher
calculer casser causer chasser chauffer chuchoter classer coller compter conseiller
conserver consulter continuer copier créer crier critiquer décider décorer déclarer
décorer demeurer déménager dépasser dépenser déposer désirer détester deviner discuter
diviser doubler douter échanger éclairer économiser éliminer embrasser emprunter
enregistrer enseigner entourer éviter exagérer exister exprimer fabriquer féliciter fêter
former frapper fumer glisser gonfler griller habiller hésiter ignorer imaginer imprimer
informer inquiéter installer intéresser inventer jurer lâcher libérer livrer louer
marquer mériter mesurer mériter moquer noter observer occuper organiser oser pardonner
participer pêcher peigner persuader photographier piquer plaisanter pleurer plier poser
pousser pratiquer présenter presser prêter prier profiter prouver provoquer quitter
raconter ramasser rater réaliser recommander réclamer recommencer reculer refuser regretter
remarquer remercier remplir? rassurer rembourser respirer ressembler retarder retirer
réveiller risquer rouler sauver signaler souhaiter sonner souffler supposer surveiller
téléphoner tenter terminer tirer traverser tromper tuer unir? utiliser vérifier verser
voter
"""
IR_VERBS = """finir choisir réussir grandir remplir obéir punir réfléchir rougir vieillir
grossir maigrir nourrir guérir bâtir applaudir avertir établir fournir garantir investir
ralentir réagir saisir salir unir agir accomplir atterrir envahir"""
RE_VERBS = """vendre attendre entendre répondre perdre descendre rendre défendre mordre tondre
fondre correspondre pendre tendre confondre répandre suspendre détendre"""

IRREG_FAMILIES = {
    "être": ["être"], "avoir": ["avoir"], "aller": ["aller"], "faire": ["faire", "refaire", "défaire", "satisfaire"],
    "dire": ["dire", "redire"], "pouvoir": ["pouvoir"], "vouloir": ["vouloir"], "devoir": ["devoir"],
    "savoir": ["savoir"],
    "v-enir": ["venir", "devenir", "revenir", "tenir", "obtenir", "appartenir", "contenir",
               "maintenir", "retenir", "soutenir", "parvenir", "intervenir", "prévenir",
               "convenir", "souvenir", "détenir"],
    "v-prendre": ["prendre", "apprendre", "comprendre", "surprendre", "reprendre", "entreprendre"],
    "v-mettre": ["mettre", "permettre", "promettre", "admettre", "remettre", "soumettre",
                 "transmettre", "commettre"],
    "v-voir": ["voir", "revoir"], "croire": ["croire"],
    "v-tir": ["partir", "sortir", "sentir", "mentir", "repartir", "ressentir", "consentir"],
    "v-mir": ["dormir", "endormir"], "v-vir": ["servir", "desservir"],
    "v-rir": ["ouvrir", "couvrir", "offrir", "souffrir", "découvrir", "recouvrir", "rouvrir"],
    "lire": ["lire"], "v-crire": ["écrire", "décrire", "inscrire", "prescrire", "récrire"],
    "boire": ["boire"],
    "v-aître": ["connaître", "paraître", "disparaître", "reconnaître", "apparaître"],
    "vivre": ["vivre"], "suivre": ["suivre"],
    "v-cevoir": ["recevoir", "apercevoir", "décevoir", "concevoir"],
    "v-courir": ["courir", "parcourir", "secourir", "accourir"], "mourir": ["mourir"],
    "naître": ["naître"], "v-rire": ["rire", "sourire"],
    "v-uire": ["conduire", "construire", "détruire", "produire", "traduire", "réduire",
               "cuire", "introduire", "séduire", "instruire"],
    "v-indre": ["craindre", "peindre", "joindre", "éteindre", "plaindre", "atteindre",
                "rejoindre", "teindre"],
    "v-plaire": ["plaire", "déplaire"], "v-battre": ["battre", "combattre", "abattre"],
    "v-voyer": ["envoyer", "renvoyer"], "falloir": ["falloir"], "pleuvoir": ["pleuvoir"],
}
for tab, members in IRREG_FAMILIES.items():
    for v in members:
        fields = {"tab": tab}
        if v in ETRE_VERBS:
            fields["aux"] = "êt"
        add(v, "V", **fields)


def er_table(v):
    if v.endswith("éger"):
        return "v-éger"
    if v.endswith("ger"):
        return "v-ger"
    if v.endswith("cer"):
        return "v-cer"
    if v.endswith("yer"):
        return "v-yer"
    if v in ("appeler", "rappeler"):
        return "v-ell"
    if v in ("jeter", "rejeter"):
        return "v-ett"
    s = v[:-2]
    for cons in ["vr", "v", "n", "t", "s", "m", "l", "r"]:
        if s.endswith("e" + cons) and len(s) > len(cons) + 1 and s[-len(cons) - 2] not in "aeiouéè":
            return "v-e%ser" % cons
    for cons in ["gn", "ch", "br", "tr", "r", "t", "d", "l", "n"]:
        if s.endswith("é" + cons) and "v-é%ser" % cons in conj:
            return "v-é%ser" % cons
    return "v-er"


for v in ER_VERBS.split():
    if "?" in v:
        continue
    fields = {"tab": er_table(v)}
    if v in ETRE_VERBS:
        fields["aux"] = "êt"
    add(v, "V", **fields)
for v in IR_VERBS.split():
    add(v, "V", tab="v-ir")
for v in RE_VERBS.split():
    fields = {"tab": "v-re"}
    if v in ETRE_VERBS:
        fields["aux"] = "êt"
    add(v, "V", **fields)

ADJ = {
    "a-e": """valide applicable rouge jaune rose facile difficile calme riche pauvre triste jeune large malade rapide
        simple sympathique utile magnifique moderne propre sale vide drôle célèbre possible
        impossible nécessaire agréable aimable formidable confortable terrible honnête libre sage
        sombre tranquille étrange énorme fidèle fragile habile humide juste mince mobile
        splendide solide stupide timide unique vaste électrique économique politique pratique
        typique logique tragique comique classique historique chimique physique rare
        triste utile inutile faible aimable capable coupable efficace âgé?""",
    "a-1": """grand petit joli vert noir brun blond chaud froid haut lourd lent fort court content
        prudent intelligent élégant important intéressant différent parfait plein rond droit laid
        américain africain marocain mexicain allemand espagnol seul poli fini vrai clair sûr dur
        mûr obscur pur bleu fatigué occupé pressé compliqué préféré désolé cultivé âgé méchant
        gourmand charmant brillant puissant excellent évident récent absent présent patient
        urgent suivant prochain certain lointain humain urbain vilain plat idiot étroit haut?
        fermé ouvert couvert cassé perdu connu inconnu""",
    "a-s": "gris mauvais français anglais épais? frais? niais mauvais exquis soumis précis",
    "a-s2": "gros gras bas épais las",
    "a-eux": """heureux malheureux dangereux délicieux sérieux curieux joyeux paresseux nerveux généreux
        courageux ennuyeux merveilleux précieux nombreux silencieux furieux honteux amoureux
        affreux peureux hideux""",
    "a-f": "défectif actif sportif vif neuf naïf attentif positif négatif créatif agressif impulsif craintif",
    "a-l": """cruel naturel réel actuel habituel professionnel traditionnel exceptionnel éternel
        gentil pareil vermeil personnel officiel""",
    "a-n": "ancien bon européen moyen italien canadien parisien breton mignon quotidien chrétien",
    "a-er": """premier dernier cher léger fier entier étranger régulier particulier familier
        printanier grossier singulier""",
    "a-al": """national normal général principal spécial international amical central égal global
        légal libéral local mental moral musical original royal social total vertical brutal
        idéal""",
    "a-et": "muet net coquet",
    "a-et2": "complet concret discret inquiet secret",
    "a-eau": "beau nouveau",
    "a-c": "blanc franc",
    "a-g": "long",
    "a-ou": "fou mou",
    "a-ieux": "vieux",
    "a-inv": "orange marron chic",
    "a-x": "jaloux heureux?",
    "a-ux": "doux",
    "a-aux": "faux",
}
for tab, words in ADJ.items():
    for a in words.split():
        if "?" in a:
            continue
        fields = {"tab": tab}
        if a in H_ASPIRE:
            fields["h"] = True
        add(a, "A", **fields)
add("meilleur", "A", tab="a-1")
add("sec", "A", tab="a-1", irreg={"fs": "sèche", "fp": "sèches"})
add("frais", "A", tab="a-s", irreg={"fs": "fraîche", "fp": "fraîches"})
lex["bon"]["A"]["irreg"] = {"co": "meilleur"}

ADV = """ne maintenant aujourd'hui demain hier toujours jamais souvent parfois ici là bien mal très
trop assez beaucoup peu vite déjà encore aussi ensuite enfin puis non oui pas plus moins tôt
tard longtemps ensemble partout vraiment seulement lentement rapidement doucement facilement
heureusement certainement peut-être presque environ bientôt autrefois dehors dedans loin près
ainsi alors surtout plutôt même quand où comment pourquoi combien volontiers ailleurs si"""
for a in ADV.split():
    add(a, "Adv", tab="inv")
for p in """à de en dans sur sous par pour avec sans chez vers entre contre devant derrière
avant après pendant depuis parmi selon malgré jusque dès hors envers""".split():
    add(p, "P", tab="inv")
for c in "et ou mais donc or ni car que si quand comme lorsque puisque quoique".split():
    add(c, "C", tab="inv")

add("le", "D", tab="d-le")
add("un", "D", tab="d-un")
add("ce", "D", tab="d-ce")
for d in ["mon", "ton", "son"]:
    add(d, "D", tab="d-on")
add("notre", "D", tab="d-re")
add("votre", "D", tab="d-re")
add("leur", "D", tab="d-leur")
add("tout", "D", tab="d-tout")
add("quel", "D", tab="d-el")
add("aucun", "D", tab="d-1")
add("quelque", "D", tab="d-que")
for d in ["chaque", "plusieurs"]:
    add(d, "D", tab="inv")

PERS = [("je", 1, "s", None, "nom"), ("me", 1, "s", None, "acc"), ("moi", 1, "s", None, "tonic"),
        ("tu", 2, "s", None, "nom"), ("te", 2, "s", None, "acc"), ("toi", 2, "s", None, "tonic"),
        ("il", 3, "s", "m", "nom"), ("le", 3, "s", "m", "acc"), ("lui", 3, "s", "m", "tonic"),
        ("elle", 3, "s", "f", "nom"), ("la", 3, "s", "f", "acc"),
        ("nous", 1, "p", None, "nom"), ("vous", 2, "p", None, "nom"),
        ("ils", 3, "p", "m", "nom"), ("eux", 3, "p", "m", "tonic"), ("elles", 3, "p", "f", "nom"),
        ("les", 3, "p", "m", "acc"), ("leur", 3, "p", "m", "dat"), ("se", 3, "s", None, "refl")]
for lemma, pe, n, g, c in PERS:
    fields = {"tab": "pn-pers", "pe": pe, "n": n, "c": c}
    if g:
        fields["g"] = g
    add(lemma, "Pro", **fields)
for p in """on y en qui que quoi ce cela ça rien personne quelqu'un chacun quelque-chose""".split():
    add(p, "Pro", tab="inv")

os.makedirs(OUT, exist_ok=True)
with open(os.path.join(OUT, "rules.json"), "w", encoding="utf-8") as f:
    json.dump(rules, f, ensure_ascii=False, indent=1)
with open(os.path.join(OUT, "lexicon.json"), "w", encoding="utf-8") as f:
    f.write("{\n" + ",\n".join(json.dumps(k, ensure_ascii=False) + ": " +
                               json.dumps(lex[k], ensure_ascii=False, sort_keys=True)
                               for k in sorted(lex)) + "\n}\n")
print("fr entries:", sum(len(v) for v in lex.values()))
