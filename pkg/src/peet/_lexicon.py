"""Embedded word lists backing the fallback tagger and lemmatizer.

Closed classes are enumerated exhaustively; open classes carry a few hundred
common words whose inflections are generated below. Wide coverage is not the
goal: the lists only need to make tagging deterministic and give the edit
classifier a usable notion of "known word".
"""

DETERMINERS = """
the a an this that these those my your his its our their some any no every
each either neither another such both all half many much few little several
""".split()

PREPOSITIONS = """
of in on at by for with from about into over under between through during
against among within without off above below across behind beyond near
toward towards upon after before around along past until since despite
inside outside onto via per
""".split()

PRONOUNS = """
i you he she it we they me him her us them myself yourself himself herself
itself ourselves yourselves themselves mine yours hers ours theirs who whom
whose which what someone anyone everyone anybody everybody nobody something
anything everything nothing one ones
""".split()

CONJUNCTIONS = """
and or but nor so yet because although though while if unless whereas once
whether than as when whenever wherever
""".split()

PARTICLES = ["to", "not"]

# Clitic tokens as produced by Penn-style tokenization.
CONTRACTION_TOKENS = ["'s", "'d", "'ll", "'m", "'re", "'ve", "n't"]

# Contraction token <-> expanded form, used by the classifier.
CONTRACTION_PAIRS = [
    ("n't", "not"),
    ("'ve", "have"),
    ("'ll", "will"),
    ("'re", "are"),
    ("'m", "am"),
    ("'s", "is"),
    ("'s", "has"),
    ("'d", "would"),
    ("'d", "had"),
]

ADVERBS = """
very really quite too also often never always sometimes usually again soon
now then here there well almost already just still even maybe perhaps
together away back instead rather early late yesterday today tomorrow
moreover however therefore furthermore
""".split()

# Modal and auxiliary verbs (invariant forms), including the split-off stems
# of negated modals ("ca n't", "wo n't", "sha n't").
MODALS = """
can could may might must shall should will would ca wo sha need ought
""".split()

# lemma -> irregular forms (3sg and regular -ing are generated when absent)
IRREGULAR_VERBS = {
    "be": ["am", "is", "are", "was", "were", "been", "being"],
    "have": ["has", "had", "having"],
    "do": ["does", "did", "done"],
    "go": ["goes", "went", "gone"],
    "eat": ["ate", "eaten"],
    "see": ["saw", "seen"],
    "take": ["took", "taken"],
    "give": ["gave", "given"],
    "come": ["came"],
    "get": ["got", "gotten", "getting"],
    "make": ["made"],
    "say": ["said"],
    "know": ["knew", "known"],
    "think": ["thought"],
    "find": ["found"],
    "tell": ["told"],
    "leave": ["left"],
    "write": ["wrote", "written", "writing"],
    "read": ["read"],
    "run": ["ran", "running"],
    "catch": ["caught"],
    "fly": ["flew", "flown"],
    "bring": ["brought"],
    "buy": ["bought"],
    "teach": ["taught"],
    "feel": ["felt"],
    "keep": ["kept"],
    "hold": ["held"],
    "stand": ["stood"],
    "hear": ["heard"],
    "meet": ["met"],
    "pay": ["paid"],
    "sit": ["sat", "sitting"],
    "lose": ["lost"],
    "win": ["won", "winning"],
    "send": ["sent"],
    "build": ["built"],
    "speak": ["spoke", "spoken"],
    "break": ["broke", "broken"],
    "choose": ["chose", "chosen"],
    "drive": ["drove", "driven"],
    "wear": ["wore", "worn"],
    "grow": ["grew", "grown"],
    "throw": ["threw", "thrown"],
    "understand": ["understood"],
    "begin": ["began", "begun", "beginning"],
    "sing": ["sang", "sung"],
    "swim": ["swam", "swum", "swimming"],
    "fall": ["fell", "fallen"],
    "rise": ["rose", "risen"],
    "sleep": ["slept"],
    "spend": ["spent"],
    "mean": ["meant"],
    "put": ["put", "putting"],
    "let": ["let", "letting"],
    "set": ["set", "setting"],
    "become": ["became"],
    "forget": ["forgot", "forgotten", "forgetting"],
}

# Regular verbs: 3sg/-ed/-ing forms generated by suffix rules. Avoids stems
# whose inflections double the final consonant (those go in the table above).
REGULAR_VERBS = """
walk talk work play open close look ask answer call clean cook count cross
dance die dress end enjoy explain fill finish fix follow happen help improve
join jump laugh learn like listen live love move need notice offer paint
pick point print pull push rain reach receive believe remember rest return
save seem share show smile start stay study talk test thank touch train try
turn use visit wait want wash watch worry
""".split()

# lemma -> irregular plural
IRREGULAR_NOUNS = {
    "man": "men",
    "woman": "women",
    "child": "children",
    "person": "people",
    "mouse": "mice",
    "goose": "geese",
    "foot": "feet",
    "tooth": "teeth",
    "sheep": "sheep",
    "fish": "fish",
    "life": "lives",
    "leaf": "leaves",
}

NOUNS = """
cat dog house time year way day world school student book water room mother
father friend problem sentence word text error correction editor tool city
country family group hand head eye night morning week month money question
answer idea door window table chair car street tree garden market store
letter paper page story music song game team player teacher doctor nurse
office job company market name number part place point reason result state
system thing food bread milk coffee tea apple orange sun moon star sky rain
snow wind fire river mountain road bridge train bus plane ship boat computer
phone message picture film movie lesson class test exam report meeting plan
project work rule law right power war peace history language voice sound
light color shape size line side end start middle top bottom north south
east west spring summer autumn winter hour minute second moment week dream
hope fear love hate joy surprise mistake chance choice change effect cause
example case matter fact truth lie news article journal price cost value
interest bank account card key lock box bag cup glass plate knife fork spoon
bottle clothes shirt dress shoe hat coat ring watch clock wall floor roof
kitchen bathroom bedroom garden yard farm field forest beach sea ocean lake
island hill valley desert
""".split()

# lemma -> (comparative, superlative) for stems the suffix rules mishandle
IRREGULAR_ADJ_FORMS = {
    "good": ("better", "best"),
    "bad": ("worse", "worst"),
    "far": ("farther", "farthest"),
    "big": ("bigger", "biggest"),
    "hot": ("hotter", "hottest"),
    "sad": ("sadder", "saddest"),
    "thin": ("thinner", "thinnest"),
}

ADJECTIVES = """
good bad big small large long short high low old young new early late
important different right wrong nice happy sad fast slow easy hard strong
weak tall quick rich poor clean dirty dark bright cold hot warm cool deep
wide narrow heavy light full empty open closed free busy safe dangerous
quiet loud soft sweet sour fresh dry wet kind cruel fair clear simple
complex cheap great proud smart neat near far thin thick interesting boring
beautiful ugly famous popular common rare true false real whole main local
national public private healthy sick tired ready sure certain possible
impossible useful useless correct incorrect grammatical
""".split()

# Adjectives with regular -er/-est comparatives worth knowing as words.
GRADABLE_ADJECTIVES = """
tall fast slow old young new cheap clean clear cold cool dark deep fair full
great hard high kind light long loud low near neat nice poor proud quick
rich short small smart soft strong sweet warm weak wide fresh bright
""".split()

# Adjective stems whose -ly adverb is common enough to embed.
LY_ADVERB_STEMS = """
quick slow clear soft loud nice bad sad real sure certain true deep high
kind neat proud rich strong sweet warm weak wide happy easy busy
""".split()
