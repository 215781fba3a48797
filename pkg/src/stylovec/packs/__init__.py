"""Language packs: manifest-driven metric registries for en, pl, uk, ru.

A pack is an INI manifest under ``packs/data`` declaring lexicons and
metrics. Each metric instantiates either a universal family (POS and
feature incidences, patterns, lexical statistics, lexicon matchers) or
a named language detector. Token tests inside manifests use a compact
condition syntax::

    upos=VERB,AUX; deprel=root,ccomp,cop; feat.Tense=Past; head.upos=NOUN

and sentence patterns add a leading quantifier (any/all/none/first/last)
per ``clause.N`` key.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..engine import Metric, MetricDescriptor, Registry
from ..lexicons import (
    AffectiveNorms,
    Lexicon,
    LexiconError,
    lexicon_incidence,
    load_lexicon,
    load_norms,
    norms_incidence,
    sentiment_incidence,
)
from ..model import LANGUAGES, UPOS_TAGS
from .. import universal
from . import eastslavic, english, polish

DATA_DIR = Path(__file__).resolve().parent / "data"

PACK_FILES = {"en": "en.cfg", "pl": "pl.cfg", "ru": "ru.cfg", "uk": "uk.cfg"}


class PackError(ValueError):
    """Manifest cannot be loaded into a registry."""


@dataclass
class PackResources:
    """Everything a metric builder may need besides its own params."""

    language: str
    lexicons: dict[str, Lexicon] = field(default_factory=dict)
    norms: AffectiveNorms | None = None
    emoticons: frozenset[str] = frozenset()

    def lexicon(self, name: str) -> Lexicon:
        try:
            return self.lexicons[name]
        except KeyError:
            raise PackError(f"missing lexicon {name!r}") from None


@dataclass(frozen=True)
class PackManifest:
    language: str
    categories: tuple[str, ...]
    metric_ids: tuple[str, ...]
    resources: PackResources


# ---------------------------------------------------------------------------
# condition mini-language


def _split_values(value: str) -> tuple[str, ...]:
    return tuple(v.strip() for v in value.split(",") if v.strip())


def _parse_test(spec: str) -> universal.TokenTest:
    kwargs: dict = {}
    feats: list[tuple[str, str]] = []
    nested: dict[str, list[str]] = {"child": [], "nochild": [], "head": []}
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        key = key.strip()
        value = value.strip()
        if not sep or not value:
            raise PackError(f"bad condition {part!r}")
        prefix, dot, rest = key.partition(".")
        if prefix in nested and dot and prefix != "feat":
            nested[prefix].append(f"{rest}={value}")
        elif key == "upos":
            upos = frozenset(_split_values(value))
            bad = upos - UPOS_TAGS
            if bad:
                raise PackError(f"unknown UPOS {sorted(bad)}")
            kwargs["upos"] = upos
        elif key == "deprel":
            kwargs["deprel"] = frozenset(_split_values(value))
        elif key == "deprel_base":
            kwargs["deprel_base"] = frozenset(_split_values(value))
        elif key == "lemma":
            kwargs["lemma_in"] = frozenset(v.casefold() for v in _split_values(value))
        elif key == "form":
            kwargs["form_in"] = frozenset(v.casefold() for v in _split_values(value))
        elif key == "form_re":
            kwargs["form_re"] = re.compile(value)
        elif key == "form_not_re":
            kwargs["form_not_re"] = re.compile(value)
        elif key.startswith("feat."):
            feats.append((key[5:], value))
        elif key == "nofeat":
            kwargs["feats_absent"] = _split_values(value)
        elif key == "entity":
            kwargs["entity"] = value
        elif key == "punct":
            kwargs["is_punct"] = _parse_bool(value)
        elif key == "xpos":
            kwargs["xpos_prefix"] = value
        else:
            raise PackError(f"unknown condition key {key!r}")
    if feats:
        kwargs["feats"] = tuple(feats)
    for prefix, parts in nested.items():
        if parts:
            attr = {"nochild": "no_child"}.get(prefix, prefix)
            kwargs[attr] = _parse_test("; ".join(parts))
    return universal.TokenTest(**kwargs)


def _parse_clause(spec: str) -> universal.SentenceClause:
    quantifier, sep, rest = spec.partition(";")
    quantifier = quantifier.strip()
    if not sep:
        raise PackError(f"clause {spec!r} lacks conditions")
    try:
        return universal.SentenceClause(quantifier=quantifier, test=_parse_test(rest))
    except ValueError as exc:
        raise PackError(str(exc)) from None


def _parse_bool(value: str) -> bool:
    low = value.strip().casefold()
    if low in ("yes", "true", "1"):
        return True
    if low in ("no", "false", "0"):
        return False
    raise PackError(f"bad boolean {value!r}")


def _req(params: dict[str, str], key: str) -> str:
    try:
        return params[key]
    except KeyError:
        raise PackError(f"missing parameter {key!r}") from None


# ---------------------------------------------------------------------------
# family builders


def _fam_pos(params, pack):
    upos = _req(params, "upos")
    if upos not in UPOS_TAGS:
        raise PackError(f"unknown UPOS {upos!r}")
    return universal.pos_incidence(upos)


def _fam_feat(params, pack):
    test = _parse_test(_req(params, "test"))
    if not test.feats:
        raise PackError("feat_incidence needs at least one feat.* condition")
    return universal.token_pattern(test)


def _fam_token_pattern(params, pack):
    return universal.token_pattern(_parse_test(_req(params, "test")))


def _fam_sentence_pattern(params, pack):
    clauses = []
    for key in sorted(k for k in params if k.startswith("clause.")):
        clauses.append(_parse_clause(params[key]))
    if not clauses:
        raise PackError("sentence_pattern needs clause.N keys")
    return universal.sentence_pattern(tuple(clauses))


def _fam_ttr(params, pack):
    layer = params.get("layer", "form")
    if layer not in ("form", "lemma"):
        raise PackError(f"unknown layer {layer!r}")
    return universal.type_token_ratio(layer)


def _fam_top_frequency(params, pack):
    fraction = float(_req(params, "fraction"))
    if not 0 < fraction <= 1:
        raise PackError(f"fraction {fraction} outside (0, 1]")
    return universal.top_frequency_incidence(fraction, params.get("layer", "form"))


def _fam_word_length(params, pack):
    min_syllables = params.get("min_syllables")
    min_chars = params.get("min_chars")
    if min_syllables is None and min_chars is None:
        raise PackError("word_length needs min_syllables or min_chars")
    return universal.word_length_incidence(
        min_syllables=int(min_syllables) if min_syllables else None,
        min_chars=int(min_chars) if min_chars else None,
        language=pack.language,
    )


def _fam_content_function(params, pack):
    try:
        return universal.function_content_split(_req(params, "kind"))
    except ValueError as exc:
        raise PackError(str(exc)) from None


def _fam_graphical(params, pack):
    kind = _req(params, "kind")
    try:
        return universal.graphical_incidence(kind, emoticons=pack.emoticons)
    except ValueError as exc:
        raise PackError(str(exc)) from None


def _fam_lexicon(params, pack):
    return lexicon_incidence(pack.lexicon(_req(params, "lexicon")))


def _fam_sentiment(params, pack):
    try:
        return sentiment_incidence(pack.lexicon(_req(params, "lexicon")),
                                   _req(params, "sign"))
    except (LexiconError, ValueError) as exc:
        raise PackError(str(exc)) from None


def _fam_norms(params, pack):
    if pack.norms is None:
        raise PackError("pack declares no norms file")
    try:
        return norms_incidence(pack.norms, _req(params, "dimension"),
                               _req(params, "side"))
    except (LexiconError, ValueError) as exc:
        raise PackError(str(exc)) from None


def _fam_phrase_distance(params, pack):
    upos = _req(params, "upos")
    if upos not in ("NOUN", "VERB", "ADP", "ADJ", "ADV"):
        raise PackError(f"unsupported phrase head {upos!r}")
    return universal.phrase_distance(upos)


def _fam_repetition(params, pack):
    try:
        return universal.repetition_incidence(_req(params, "kind"))
    except ValueError as exc:
        raise PackError(str(exc)) from None


# family name -> (builder, default local, default scale_invariant)
FAMILIES = {
    "pos_incidence": (_fam_pos, True, True),
    "feat_incidence": (_fam_feat, True, True),
    "token_pattern": (_fam_token_pattern, True, True),
    "sentence_pattern": (_fam_sentence_pattern, True, True),
    "type_token_ratio": (_fam_ttr, True, False),
    "top_frequency": (_fam_top_frequency, True, False),
    "word_length": (_fam_word_length, True, True),
    "content_function": (_fam_content_function, True, True),
    "graphical": (_fam_graphical, True, True),
    "lexicon": (_fam_lexicon, True, True),
    "sentiment": (_fam_sentiment, True, True),
    "norms": (_fam_norms, True, True),
    "phrase_distance": (_fam_phrase_distance, False, False),
    "repetition": (_fam_repetition, True, False),
}

DETECTORS = {**english.DETECTORS, **polish.DETECTORS, **eastslavic.DETECTORS}

_META_KEYS = frozenset({"category", "family", "detector", "name_en",
                        "description", "language", "local", "scale_invariant"})


def _load_emoticons(path: Path) -> frozenset[str]:
    try:
        text = path.read_bytes().decode("utf-8")
    except FileNotFoundError:
        raise PackError(f"{path}: no such file") from None
    except UnicodeDecodeError as exc:
        raise PackError(f"{path}: not valid UTF-8: {exc}") from None
    entries = [ln.strip() for ln in text.splitlines()]
    return frozenset(e for e in entries if e and not e.startswith("#"))


def _read_manifest(language: str) -> configparser.ConfigParser:
    path = DATA_DIR / PACK_FILES[language]
    cfg = configparser.ConfigParser(interpolation=None, strict=True,
                                    delimiters=("=",), comment_prefixes=("#",))
    cfg.optionxform = str
    try:
        with open(path, encoding="utf-8") as fh:
            cfg.read_file(fh)
    except FileNotFoundError:
        raise PackError(f"{path}: no such manifest") from None
    except configparser.Error as exc:
        raise PackError(f"{path}: {exc}") from None
    return cfg


def load_pack(language: str) -> tuple[PackManifest, Registry]:
    """Build the full registry for one language from its manifest."""
    if language not in PACK_FILES:
        supported = ", ".join(sorted(PACK_FILES))
        raise PackError(f"unsupported language {language!r}; supported: {supported}")
    cfg = _read_manifest(language)
    if "pack" not in cfg:
        raise PackError(f"{language}: manifest lacks [pack] section")
    head = cfg["pack"]
    if head.get("language") != language:
        raise PackError(f"{language}: manifest declares language {head.get('language')!r}")
    categories = _split_values(head.get("categories", ""))
    if not categories:
        raise PackError(f"{language}: manifest declares no categories")

    pack = PackResources(language=language)
    if head.get("emoticons"):
        pack.emoticons = _load_emoticons(DATA_DIR / head["emoticons"])
    if head.get("norms"):
        try:
            pack.norms = load_norms(DATA_DIR / head["norms"])
        except LexiconError as exc:
            raise PackError(str(exc)) from None

    metric_sections: list[tuple[str, dict[str, str]]] = []
    for section in cfg.sections():
        if section == "pack":
            continue
        kind, _, name = section.partition(" ")
        name = name.strip()
        if kind == "lexicon" and name:
            opts = dict(cfg[section])
            mode = opts.get("mode")
            file = opts.get("file")
            if not mode or not file:
                raise PackError(f"lexicon {name}: needs file and mode")
            exceptions = opts.get("exceptions")
            try:
                pack.lexicons[name] = load_lexicon(
                    DATA_DIR / file, mode, name=name,
                    exceptions_path=DATA_DIR / exceptions if exceptions else None)
            except LexiconError as exc:
                raise PackError(f"lexicon {name}: {exc}") from None
        elif kind == "metric" and name:
            metric_sections.append((name, dict(cfg[section])))
        else:
            raise PackError(f"unrecognized section [{section}]")

    registry = Registry()
    for mid, opts in metric_sections:
        try:
            registry.register(_build_metric(mid, opts, pack, categories))
        except PackError as exc:
            raise PackError(f"metric {mid}: {exc}") from None
        except ValueError as exc:
            raise PackError(f"metric {mid}: {exc}") from None
    if len(registry) == 0:
        raise PackError(f"{language}: manifest defines no metrics")
    manifest = PackManifest(language=language, categories=categories,
                            metric_ids=registry.ids(), resources=pack)
    return manifest, registry


def _build_metric(mid: str, opts: dict[str, str], pack: PackResources,
                  categories: tuple[str, ...]) -> Metric:
    category = opts.get("category")
    if not category:
        raise PackError("missing category")
    if category not in categories:
        raise PackError(f"category {category!r} not declared by the pack")
    family = opts.get("family")
    detector = opts.get("detector")
    if bool(family) == bool(detector):
        raise PackError("exactly one of family/detector required")
    params = {k: v for k, v in opts.items() if k not in _META_KEYS}
    if family:
        if family not in FAMILIES:
            raise PackError(f"unknown family {family!r}")
        builder, local, scale_invariant = FAMILIES[family]
    else:
        if detector not in DETECTORS:
            raise PackError(f"unknown detector {detector!r}")
        builder, local, scale_invariant = DETECTORS[detector], True, True
    try:
        rule = builder(params, pack)
    except (LexiconError, ValueError, KeyError) as exc:
        raise PackError(str(exc)) from None
    if "local" in opts:
        local = _parse_bool(opts["local"])
    if "scale_invariant" in opts:
        scale_invariant = _parse_bool(opts["scale_invariant"])
    descriptor = MetricDescriptor(
        id=mid,
        category=category,
        language=opts.get("language", pack.language),
        description=opts.get("description", ""),
        name_en=opts.get("name_en", ""),
        local=local,
        scale_invariant=scale_invariant,
    )
    return Metric(descriptor=descriptor, rule=rule)


_CACHE: dict[str, tuple[PackManifest, Registry]] = {}


def pack_for(language: str) -> tuple[PackManifest, Registry]:
    if language not in _CACHE:
        _CACHE[language] = load_pack(language)
    return _CACHE[language]


def registry_for(language: str, categories=None, metric_ids=None) -> Registry:
    """The registry for one language, optionally narrowed to categories
    and/or explicit metric ids."""
    _, registry = pack_for(language)
    if categories or metric_ids:
        try:
            return registry.subset(categories=categories, ids=metric_ids)
        except KeyError as exc:
            raise PackError(exc.args[0]) from None
    return registry
