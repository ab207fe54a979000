"""Sentence splitting, tokenization, POS tagging and three-tier classification.

Tokens are classified by Penn Treebank tag into three keyword tiers:

* primary   -- NN, NNS, NNP, NNPS (the sentence subjects / anchors)
* secondary -- VB, VBD, VBG, VBN, VBP, VBZ, JJ, MD (attributes of the subject)
* tertiary  -- RB, RBS (adverbs, each attached to one secondary keyword)

Everything else is discarded. The shipped tagger additionally uses the
non-Penn tag ``AUX`` for auxiliary and copular verb forms ("is", "has",
"did", ...) so they are discarded rather than stored as secondary
keywords; callers bringing their own tagger may tag them as ordinary
verbs if they want them kept.

Within the primary tier, proper nouns are listed ahead of common nouns
(each group in surface order): the proper noun names the anchor subject
regardless of where it sits in the sentence. Secondary and tertiary
keywords keep plain surface order.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Protocol, Sequence

from textmem.errors import TextmemError

log = logging.getLogger(__name__)

PRIMARY_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})
PROPER_TAGS = frozenset({"NNP", "NNPS"})
SECONDARY_TAGS = frozenset({"VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "JJ", "MD"})
TERTIARY_TAGS = frozenset({"RB", "RBS"})

_SENTENCE_END = re.compile(r"[.?!](?:\s+|$)")
_TOKEN = re.compile(r"\w+(?:'\w+)*")


class PretaggedFormatError(TextmemError):
    """A pre-tagged input line does not follow the surface_TAG format."""


@dataclass(frozen=True)
class TaggedToken:
    """One token with its part-of-speech tag (surface case preserved)."""

    surface: str
    tag: str


@dataclass(frozen=True)
class NodeSketch:
    """Per-sentence keyword record: the three tiers of one encoded sentence.

    ``tertiary`` entries are ``(prev_index, word)`` pairs where
    ``prev_index`` is the 0-based position of the secondary keyword the
    adverb modifies.
    """

    primary: tuple[str, ...] = ()
    secondary: tuple[str, ...] = ()
    tertiary: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        for prev, _ in self.tertiary:
            if not 0 <= prev < len(self.secondary):
                raise ValueError(f"tertiary prev index {prev} out of range")

    @property
    def tertiary_words(self) -> tuple[str, ...]:
        return tuple(word for _, word in self.tertiary)


class Tagger(Protocol):
    """Tagging capability: a deterministic map from tokens to tagged tokens.

    Implementations must return exactly one TaggedToken per input token
    and be stable across calls for the same input.
    """

    def __call__(self, tokens: Sequence[str]) -> list[TaggedToken]: ...


def split_sentences(text: str) -> list[str]:
    """Split text into sentences on '.', '?' or '!' followed by whitespace or end.

    No abbreviation handling is attempted; empty input yields an empty list.
    """
    parts = [part.strip() for part in _SENTENCE_END.split(text)]
    return [part for part in parts if part]


def tokenize(sentence: str) -> list[str]:
    """Extract word tokens, dropping punctuation and preserving case."""
    return _TOKEN.findall(sentence)


def tag(tokens: Sequence[str], tagger: Tagger) -> list[TaggedToken]:
    """Tag tokens with the given tagger, enforcing the one-tag-per-token contract."""
    tagged = tagger(tokens)
    if len(tagged) != len(tokens):
        raise TextmemError(
            f"tagger returned {len(tagged)} tags for {len(tokens)} tokens"
        )
    return tagged


def classify(tagged: Sequence[TaggedToken]) -> NodeSketch:
    """Sort tagged tokens into the three keyword tiers.

    Adverbs attach to the nearest following JJ-tagged secondary keyword;
    failing that, to the nearest preceding secondary keyword, then to the
    nearest following one (distance ties break toward the earlier token).
    An adverb in a sentence with no secondary keyword at all is dropped.
    """
    proper: list[str] = []
    common: list[str] = []
    secondary: list[str] = []
    sec_positions: list[tuple[int, str]] = []  # (token index, tag)
    adverbs: list[tuple[int, str]] = []
    for i, tok in enumerate(tagged):
        if tok.tag in PROPER_TAGS:
            proper.append(tok.surface)
        elif tok.tag in PRIMARY_TAGS:
            common.append(tok.surface)
        elif tok.tag in SECONDARY_TAGS:
            secondary.append(tok.surface)
            sec_positions.append((i, tok.tag))
        elif tok.tag in TERTIARY_TAGS:
            adverbs.append((i, tok.surface))

    tertiary: list[tuple[int, str]] = []
    for adv_pos, word in adverbs:
        if not sec_positions:
            log.debug("dropping adverb %r: sentence has no secondary keyword", word)
            continue
        tertiary.append((_attach_adverb(adv_pos, sec_positions), word))

    return NodeSketch(
        primary=tuple(proper + common),
        secondary=tuple(secondary),
        tertiary=tuple(tertiary),
    )


def _attach_adverb(adv_pos: int, sec_positions: list[tuple[int, str]]) -> int:
    candidates = [
        j for j, (pos, tg) in enumerate(sec_positions) if pos > adv_pos and tg == "JJ"
    ]
    if not candidates:
        candidates = [j for j, (pos, _) in enumerate(sec_positions) if pos < adv_pos]
    if not candidates:
        candidates = [j for j, (pos, _) in enumerate(sec_positions) if pos > adv_pos]
    return min(candidates, key=lambda j: (abs(sec_positions[j][0] - adv_pos), j))


def sketch_sentence(sentence: str, tagger: Tagger) -> NodeSketch:
    """Tokenize, tag and classify one sentence."""
    return classify(tag(tokenize(sentence), tagger))


def parse_pretagged(text: str) -> list[list[TaggedToken]]:
    """Parse pre-tagged input: one sentence per line, tokens as surface_TAG.

    Lets users bring their own tagger; blank lines are skipped.
    """
    sentences = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        tokens = []
        for item in line.split():
            surface, sep, tg = item.rpartition("_")
            if not sep or not surface or not tg:
                raise PretaggedFormatError(
                    f"line {lineno}: {item!r} is not of the form surface_TAG"
                )
            tokens.append(TaggedToken(surface, tg))
        sentences.append(tokens)
    return sentences


# Closed-class words keep their tag even when capitalized; AUX marks
# auxiliary/copular forms that must never reach the secondary tier.
_FUNCTION_WORDS = {
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "that": "DT",
    "these": "DT", "those": "DT", "some": "DT", "any": "DT", "each": "DT",
    "every": "DT", "no": "DT", "all": "DT", "both": "DT", "another": "DT",
    "of": "IN", "in": "IN", "on": "IN", "at": "IN", "by": "IN", "for": "IN",
    "with": "IN", "from": "IN", "as": "IN", "into": "IN", "about": "IN",
    "over": "IN", "under": "IN", "between": "IN", "through": "IN",
    "during": "IN", "after": "IN", "before": "IN", "against": "IN",
    "because": "IN", "if": "IN", "while": "IN", "than": "IN",
    "to": "TO",
    "up": "RP", "off": "RP", "out": "RP", "down": "RP",
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC", "so": "CC", "yet": "CC",
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "me": "PRP", "him": "PRP", "her": "PRP",
    "us": "PRP", "them": "PRP",
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "its": "PRP$",
    "our": "PRP$", "their": "PRP$",
    "what": "WP", "who": "WP", "whom": "WP",
    "whose": "WP$",
    "which": "WDT",
    "when": "WRB", "where": "WRB", "why": "WRB", "how": "WRB",
    "there": "EX",
    "not": "RB", "n't": "RB",
    "am": "AUX", "is": "AUX", "are": "AUX", "was": "AUX", "were": "AUX",
    "be": "AUX", "been": "AUX", "being": "AUX",
    "do": "AUX", "does": "AUX", "did": "AUX",
    "have": "AUX", "has": "AUX", "had": "AUX",
    "can": "MD", "could": "MD", "will": "MD", "would": "MD", "shall": "MD",
    "should": "MD", "may": "MD", "might": "MD", "must": "MD",
}

# Open-class lexicon: enough everyday vocabulary for the shipped demos
# and tests; anything else falls through to the suffix rules.
_CONTENT_WORDS = {
    # nouns
    "sun": "NN", "ball": "NN", "gas": "NN", "gases": "NNS", "hydrogen": "NN",
    "helium": "NN", "surface": "NN", "photosphere": "NN", "star": "NN",
    "moon": "NN", "planet": "NN", "earth": "NN", "sky": "NN", "water": "NN",
    "river": "NN", "mountain": "NN", "rock": "NN", "tree": "NN", "leaf": "NN",
    "dog": "NN", "puppy": "NN", "cat": "NN", "kitten": "NN", "bird": "NN",
    "wing": "NN", "fish": "NN", "car": "NN", "wheel": "NN", "house": "NN",
    "roof": "NN", "crater": "NN", "light": "NN", "fire": "NN", "ice": "NN",
    "wind": "NN", "rain": "NN", "snow": "NN", "cloud": "NN", "sea": "NN",
    "ocean": "NN", "sand": "NN", "grass": "NN", "flower": "NN", "stone": "NN",
    "road": "NN", "city": "NN", "town": "NN", "man": "NN", "woman": "NN",
    "child": "NN", "boy": "NN", "girl": "NN", "day": "NN", "night": "NN",
    "year": "NN", "time": "NN", "world": "NN", "life": "NN", "hand": "NN",
    "eye": "NN", "head": "NN", "voice": "NN", "door": "NN", "window": "NN",
    "book": "NN", "word": "NN", "name": "NN", "food": "NN", "milk": "NN",
    "bread": "NN", "apple": "NN", "horse": "NN", "cow": "NN", "sheep": "NN",
    "lion": "NN", "tiger": "NN", "snake": "NN", "insect": "NN", "ant": "NN",
    "bee": "NN", "spider": "NN", "boat": "NN", "ship": "NN", "train": "NN",
    "plane": "NN", "engine": "NN", "machine": "NN", "tool": "NN", "metal": "NN",
    "iron": "NN", "gold": "NN", "silver": "NN", "glass": "NN", "paper": "NN",
    "wood": "NN", "wall": "NN", "floor": "NN", "garden": "NN", "field": "NN",
    "forest": "NN", "hill": "NN", "valley": "NN", "lake": "NN", "island": "NN",
    "bridge": "NN", "school": "NN", "music": "NN", "song": "NN", "story": "NN",
    "color": "NN", "shape": "NN", "size": "NN", "heat": "NN", "energy": "NN",
    "oxygen": "NN", "carbon": "NN", "air": "NN", "smoke": "NN", "steam": "NN",
    "salt": "NN", "sugar": "NN", "tea": "NN", "coffee": "NN", "rice": "NN",
    # adjectives
    "huge": "JJ", "big": "JJ", "small": "JJ", "large": "JJ", "tiny": "JJ",
    "bright": "JJ", "dark": "JJ", "hot": "JJ", "cold": "JJ", "warm": "JJ",
    "cool": "JJ", "old": "JJ", "new": "JJ", "young": "JJ", "red": "JJ",
    "blue": "JJ", "green": "JJ", "yellow": "JJ", "white": "JJ", "black": "JJ",
    "fast": "JJ", "slow": "JJ", "tall": "JJ", "short": "JJ", "deep": "JJ",
    "shallow": "JJ", "wide": "JJ", "narrow": "JJ", "loud": "JJ", "quiet": "JJ",
    "soft": "JJ", "hard": "JJ", "heavy": "JJ", "pale": "JJ", "clear": "JJ",
    "clean": "JJ", "dirty": "JJ", "dry": "JJ", "wet": "JJ", "empty": "JJ",
    "full": "JJ", "good": "JJ", "bad": "JJ", "long": "JJ", "strong": "JJ",
    "weak": "JJ", "round": "JJ", "flat": "JJ", "sharp": "JJ", "sweet": "JJ",
    "rich": "JJ", "poor": "JJ", "free": "JJ", "safe": "JJ", "high": "JJ",
    "low": "JJ", "near": "JJ", "far": "JJ", "late": "JJ", "early": "JJ",
    # verbs
    "made": "VBN", "known": "VBN", "called": "VBN", "seen": "VBN",
    "found": "VBN", "done": "VBN", "given": "VBN", "taken": "VBN",
    "born": "VBN", "grown": "VBN", "built": "VBN", "kept": "VBN",
    "shine": "VB", "shines": "VBZ", "glow": "VB", "glows": "VBZ",
    "flow": "VB", "flows": "VBZ", "run": "VB", "runs": "VBZ",
    "grow": "VB", "grows": "VBZ", "burn": "VB", "burns": "VBZ",
    "orbit": "VB", "orbits": "VBZ", "rise": "VB", "rises": "VBZ",
    "set": "VB", "sets": "VBZ", "fly": "VB", "flies": "VBZ",
    "swim": "VB", "swims": "VBZ", "bark": "VB", "barks": "VBZ",
    "eat": "VB", "eats": "VBZ", "drink": "VB", "drinks": "VBZ",
    "sleep": "VB", "sleeps": "VBZ", "move": "VB", "moves": "VBZ",
    "live": "VB", "lives": "VBZ", "look": "VB", "looks": "VBZ",
    "go": "VB", "goes": "VBZ", "come": "VB", "comes": "VBZ",
    "make": "VB", "makes": "VBZ", "know": "VB", "knows": "VBZ",
    "say": "VB", "says": "VBZ", "see": "VB", "sees": "VBZ",
    "turn": "VB", "turns": "VBZ", "fall": "VB", "falls": "VBZ",
    # adverbs
    "mainly": "RB", "mostly": "RB", "very": "RB", "too": "RB", "also": "RB",
    "always": "RB", "never": "RB", "often": "RB", "sometimes": "RB",
    "here": "RB", "now": "RB", "then": "RB", "again": "RB", "away": "RB",
    "quickly": "RB", "slowly": "RB", "brightly": "RB", "really": "RB",
}

_SUFFIX_RULES = (
    ("ly", "RB"),
    ("ing", "VBG"),
    ("ed", "VBN"),
    ("ous", "JJ"),
    ("ful", "JJ"),
    ("ive", "JJ"),
    ("able", "JJ"),
    ("ible", "JJ"),
    ("ish", "JJ"),
    ("ic", "JJ"),
    ("al", "JJ"),
    ("tion", "NN"),
    ("sion", "NN"),
    ("ment", "NN"),
    ("ness", "NN"),
    ("ity", "NN"),
)


@dataclass
class DefaultTagger:
    """Deterministic closed-lexicon + suffix-rule tagger.

    Lookup order per token: function-word lexicon (case-insensitive),
    capitalization heuristic (capitalized and not sentence-initial ->
    NNP), content lexicon, suffix rules, NN fallback. Unknown words are
    never an error.
    """

    extra_words: dict[str, str] = field(default_factory=dict)

    def __call__(self, tokens: Sequence[str]) -> list[TaggedToken]:
        return [
            TaggedToken(token, self.tag_word(token, position))
            for position, token in enumerate(tokens)
        ]

    def tag_word(self, token: str, position: int = 1) -> str:
        lower = token.lower()
        tg = _FUNCTION_WORDS.get(lower)
        if tg is not None:
            return tg
        if position > 0 and token[:1].isupper():
            return "NNP"
        tg = self.extra_words.get(lower) or _CONTENT_WORDS.get(lower)
        if tg is not None:
            return tg
        for suffix, rule_tag in _SUFFIX_RULES:
            if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
                return rule_tag
        if lower.endswith("s") and not lower.endswith(("ss", "us", "is")) and len(lower) > 3:
            return "NNS"
        return "NN"
