#!/usr/bin/env python3
"""Generate the tagger's verb lexicon and irregular-verb table.

Emits three artifacts, all committed to the repository:

    data/verb_lexicon.tsv          inflected_form<TAB>lemma, one per line
    data/irregular_verbs.tsv       irregular form<TAB>lemma (auxiliaries included)
    include/procmatch/lexicon_data.hpp   the same two files embedded as string
                                         literals so the library works without
                                         locating resource files at runtime

Run from the repository root:  python3 scripts/make_verb_lexicon.py
"""

from pathlib import Path

# Base forms of verbs that occur in business-process prose. Auxiliaries are
# deliberately absent: the tagger classifies them with a closed-class list and
# they must never surface as actions.
VERBS = """
accept access accommodate accomplish account achieve acknowledge acquire act
activate adapt add address adjust administer adopt advance advertise advise
agree align allocate allow amend analyze announce answer anticipate apologize
appeal append apply appoint appraise approve archive arrange arrive assemble
assess assign assist assume assure attach attain attend audit authenticate
authorize automate award back balance ban base batch begin bill bind book
boost borrow brief bring browse budget build bundle buy calculate calibrate
call cancel capture carry catch categorize cause centralize certify chain
change charge chart check choose circulate claim clarify classify clean clear
close code collaborate collect combine come commission commit communicate
compare compensate compile complete comply compute conclude conduct configure
confirm connect consider consolidate construct consult consume contact
continue contract contribute control convert convey coordinate copy correct
count cover create credit cross customize cut deal debit decide declare
decline decrease dedicate deduct define delay delegate delete deliver demand
demonstrate deny depart depend deploy deposit describe design designate
detect determine develop digitize direct disable discard disclose discontinue
discount discuss dispatch display dispose distribute divide document double
download draft draw drive drop duplicate earn edit elect eliminate email
embed employ enable enclose end endorse enforce engage enhance enroll ensure
enter equip escalate establish estimate evaluate examine exceed exchange
execute exempt expand expect expedite expire explain export express extend
extract facilitate fail feed fetch file fill filter finalize finance find
finish fix flag follow forecast form formalize format forward fulfill fund
gain gather generate get give go grant group grow guarantee guide handle
happen help hire hold identify implement import improve include increase
incur index indicate inform initiate insert inspect install instruct insure
integrate intend interview introduce invest investigate invite invoice
involve issue itemize join justify keep know label launch lead learn lease
leave lend let license limit link list load locate lock log mail maintain
make manage manufacture map mark market match measure meet merge migrate
modify monitor move negotiate nominate note notify obtain offer onboard open
operate optimize order organize outline outsource oversee own pack package
participate pay perform phone pick place plan post postpone predict prepare
present preserve price print prioritize process procure produce profile
program prohibit project promote propose protect prove provide provision
publish purchase qualify quantify query queue quote raise rank rate reach
read realize receive recognize recommend reconcile record recover recruit
redeem reduce refer refine reflect refund refuse register regulate reimburse
reject release relocate remain remind remove renew rent reorder repair repeat
replace replenish reply report represent request require reroute research
reserve reset resolve respond restock restore restrict restructure resume
retain retrieve return revert review revise reward roll route run save scan
schedule screen seal search secure see select sell send serve set settle
share ship shorten show sign simplify sort source speak specify split sponsor
staff stamp standardize start state stock stop store streamline strengthen
structure submit subscribe substitute subtract succeed suggest summarize
supervise supply support survey suspend switch synchronize tag take target
teach tell terminate test think total trace track trade train transfer
transform translate transmit transport travel treat trigger troubleshoot turn
unblock undergo understand undertake unload unlock unpack unsubscribe update
upgrade upload use utilize validate value verify view void wait warn weigh
win withdraw withhold witness work wrap write
""".split()

# Words that appear far more often as nouns than as finite verbs in process
# descriptions ("an order", "the stock", "a purchase order"). Their base and
# third-person forms are left out of the lexicon so the determiner rule can
# tag them as nouns; the unambiguous -ed/-ing forms stay in.
NOUN_FIRST = {
    "access", "account", "audit", "balance", "budget", "chain", "charge",
    "claim", "contact", "contract", "credit", "demand", "deposit", "discount",
    "email", "estimate", "file", "forecast", "form", "invoice", "label",
    "list", "note", "offer", "order", "phone", "plan", "price", "process",
    "profile", "project", "purchase", "query", "queue", "quote", "rate",
    "record", "refund", "report", "request", "reserve", "schedule", "stock",
    "supply", "survey", "total",
}

# base -> (past, past participle); forms identical to the base are dropped.
IRREGULARS = {
    "begin": ("began", "begun"), "bind": ("bound", "bound"),
    "bring": ("brought", "brought"), "build": ("built", "built"),
    "buy": ("bought", "bought"), "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"), "come": ("came", "come"),
    "cut": ("cut", "cut"), "deal": ("dealt", "dealt"),
    "draw": ("drew", "drawn"), "drive": ("drove", "driven"),
    "feed": ("fed", "fed"), "find": ("found", "found"),
    "get": ("got", "got"), "give": ("gave", "given"),
    "go": ("went", "gone"), "grow": ("grew", "grown"),
    "hold": ("held", "held"), "keep": ("kept", "kept"),
    "know": ("knew", "known"), "lead": ("led", "led"),
    "leave": ("left", "left"), "lend": ("lent", "lent"),
    "let": ("let", "let"), "make": ("made", "made"),
    "meet": ("met", "met"), "pay": ("paid", "paid"),
    "read": ("read", "read"), "run": ("ran", "run"),
    "see": ("saw", "seen"), "sell": ("sold", "sold"),
    "send": ("sent", "sent"), "set": ("set", "set"),
    "show": ("showed", "shown"), "speak": ("spoke", "spoken"),
    "split": ("split", "split"), "take": ("took", "taken"),
    "teach": ("taught", "taught"), "tell": ("told", "told"),
    "think": ("thought", "thought"),
    "undergo": ("underwent", "undergone"),
    "understand": ("understood", "understood"),
    "undertake": ("undertook", "undertaken"), "win": ("won", "won"),
    "withdraw": ("withdrew", "withdrawn"),
    "withhold": ("withheld", "withheld"), "write": ("wrote", "written"),
}

# Verbs that double their final consonant before -ed/-ing.
DOUBLERS = {
    "ban", "bar", "begin", "commit", "control", "cut", "drop", "equip",
    "flag", "get", "let", "log", "map", "occur", "omit", "permit", "plan",
    "prefer", "refer", "run", "scan", "set", "ship", "shop", "split", "stop",
    "submit", "swap", "tag", "transfer", "trim", "wrap", "win",
}

AUX_FORMS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be", "has": "have", "had": "have",
    "having": "have", "does": "do", "did": "do", "done": "do",
    "doing": "do", "would": "will", "could": "can", "should": "shall",
    "might": "may",
}

VOWELS = set("aeiou")


def third_person(v: str) -> str:
    if v.endswith(("s", "x", "z", "ch", "sh", "o")):
        return v + "es"
    if v.endswith("y") and v[-2] not in VOWELS:
        return v[:-1] + "ies"
    return v + "s"


def doubled_stem(v: str) -> str:
    return v + v[-1] if v in DOUBLERS else v


def past(v: str) -> str:
    if v in IRREGULARS:
        return IRREGULARS[v][0]
    if v.endswith("e"):
        return v + "d"
    if v.endswith("y") and v[-2] not in VOWELS:
        return v[:-1] + "ied"
    return doubled_stem(v) + "ed"


def participle(v: str) -> str:
    return IRREGULARS[v][1] if v in IRREGULARS else past(v)


def gerund(v: str) -> str:
    if v.endswith("ie"):
        return v[:-2] + "ying"
    if v.endswith("e") and not v.endswith(("ee", "oe", "ye")):
        return v[:-1] + "ing"
    return doubled_stem(v) + "ing"


def build_tables():
    assert len(set(VERBS)) == len(VERBS), "duplicate base verb"
    assert len(VERBS) >= 500, f"need >=500 verbs, have {len(VERBS)}"
    closed = set(AUX_FORMS) | {"be", "have", "do", "will", "can", "shall",
                               "may", "must", "the", "a", "an", "this",
                               "that", "these", "those", "of", "in", "on",
                               "at", "by", "for", "to", "with", "and", "or",
                               "if", "then", "when"}
    assert not (set(VERBS) & closed), set(VERBS) & closed

    lexicon: dict[str, str] = {}

    def put(form: str, lemma: str) -> None:
        if form in lexicon and lexicon[form] != lemma:
            raise SystemExit(f"collision: {form} -> {lexicon[form]} / {lemma}")
        lexicon[form] = lemma

    for v in VERBS:
        if v not in NOUN_FIRST:
            put(v, v)
            put(third_person(v), v)
        put(past(v), v)
        put(participle(v), v)
        put(gerund(v), v)

    irregular = dict(AUX_FORMS)
    for base, (pa, pp) in IRREGULARS.items():
        for form in (pa, pp):
            if form != base:
                irregular[form] = base
    return lexicon, irregular


def tsv(table: dict[str, str]) -> str:
    return "".join(f"{k}\t{v}\n" for k, v in sorted(table.items()))


def main() -> None:
    root = Path(__file__).resolve().parent.parent
    lexicon, irregular = build_tables()
    verb_tsv = tsv(lexicon)
    irr_tsv = tsv(irregular)

    (root / "data").mkdir(exist_ok=True)
    (root / "data" / "verb_lexicon.tsv").write_text(verb_tsv, encoding="utf-8")
    (root / "data" / "irregular_verbs.tsv").write_text(irr_tsv, encoding="utf-8")

    header = (
        "#pragma once\n"
        "// Generated by scripts/make_verb_lexicon.py -- edit the script, not this file.\n"
        "// Embedded copies of data/verb_lexicon.tsv and data/irregular_verbs.tsv.\n"
        "#include <string_view>\n\n"
        "namespace procmatch::detail {\n\n"
        "inline constexpr std::string_view verb_lexicon_tsv =\n"
        f'    R"__tsv__({verb_tsv})__tsv__";\n\n'
        "inline constexpr std::string_view irregular_verbs_tsv =\n"
        f'    R"__tsv__({irr_tsv})__tsv__";\n\n'
        "}  // namespace procmatch::detail\n"
    )
    (root / "include" / "procmatch").mkdir(parents=True, exist_ok=True)
    (root / "include" / "procmatch" / "lexicon_data.hpp").write_text(
        header, encoding="utf-8")
    print(f"{len(set(lexicon.values()))} lemmas, {len(lexicon)} forms, "
          f"{len(irregular)} irregular entries")


if __name__ == "__main__":
    main()
