"""Lexical database (synsets + hypernym graph) and path similarity.

A desk-scale database ships with the package for tests and demos; real
WordNet 3.0 ``data.*`` files can be imported for full coverage. Path
similarity between two same-category synsets is ``1 / (1 + L)`` with ``L``
the shortest path length in the undirected hypernym graph; disconnected
pairs yield ``None``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from pathlib import Path

from factvote.assets import asset_path
from factvote.errors import CategoryMismatch, UnknownSynset

VALID_CATEGORIES = ("n", "v", "a", "r")

# WordNet data.* pointer symbols that mean "is-a parent".
_HYPERNYM_POINTERS = ("@", "@i")
_WORDNET_FILES = {
    "data.noun": "n",
    "data.verb": "v",
    "data.adj": "a",
    "data.adv": "r",
}


class LexicalDatabase:
    """Read-only synset store with a hypernym DAG and a lemma index."""

    def __init__(self, synsets: dict[str, tuple[str, list[str]]],
                 hypernyms: dict[str, list[str]]):
        for sid, (category, lemmas) in synsets.items():
            if category not in VALID_CATEGORIES:
                raise ValueError(f"synset {sid!r}: bad category {category!r}")
            if not lemmas:
                raise ValueError(f"synset {sid!r} has no lemmas")
        for child, parents in hypernyms.items():
            if child not in synsets:
                raise ValueError(f"hypernym edge from unknown synset {child!r}")
            for parent in parents:
                if parent not in synsets:
                    raise ValueError(f"hypernym edge to unknown synset {parent!r}")

        self._synsets = {sid: (cat, tuple(lemmas)) for sid, (cat, lemmas) in synsets.items()}
        self._parents = {sid: tuple(ps) for sid, ps in hypernyms.items() if ps}

        index: dict[tuple[str, str], list[str]] = defaultdict(list)
        for sid, (category, lemmas) in self._synsets.items():
            for lemma in lemmas:
                index[(lemma, category)].append(sid)
        self._lemma_index = {key: tuple(ids) for key, ids in index.items()}

        adjacency: dict[str, set[str]] = defaultdict(set)
        for child, parents in self._parents.items():
            for parent in parents:
                adjacency[child].add(parent)
                adjacency[parent].add(child)
        self._adjacency = {sid: frozenset(nbrs) for sid, nbrs in adjacency.items()}

    # -- introspection -----------------------------------------------------

    def __len__(self) -> int:
        return len(self._synsets)

    def __contains__(self, synset_id: str) -> bool:
        return synset_id in self._synsets

    def category(self, synset_id: str) -> str:
        self._require(synset_id)
        return self._synsets[synset_id][0]

    def lemmas(self, synset_id: str) -> tuple[str, ...]:
        self._require(synset_id)
        return self._synsets[synset_id][1]

    def parents(self, synset_id: str) -> tuple[str, ...]:
        self._require(synset_id)
        return self._parents.get(synset_id, ())

    def neighbors(self, synset_id: str) -> frozenset[str]:
        self._require(synset_id)
        return self._adjacency.get(synset_id, frozenset())

    def synset_ids(self) -> list[str]:
        return list(self._synsets)

    def synsets_for(self, lemma: str, category: str) -> tuple[str, ...]:
        """Synset ids carrying ``lemma`` in the given category letter."""
        return self._lemma_index.get((lemma, category), ())

    def _require(self, synset_id: str) -> None:
        if synset_id not in self._synsets:
            raise UnknownSynset(synset_id)

    def validate_acyclic(self) -> None:
        """Raise ValueError if the directed hypernym graph has a cycle."""
        WHITE, GREY, BLACK = 0, 1, 2
        state = {sid: WHITE for sid in self._synsets}
        for root in self._synsets:
            if state[root] != WHITE:
                continue
            stack = [(root, iter(self._parents.get(root, ())))]
            state[root] = GREY
            while stack:
                node, parents = stack[-1]
                advanced = False
                for parent in parents:
                    if state[parent] == GREY:
                        raise ValueError(f"hypernym cycle through {parent!r}")
                    if state[parent] == WHITE:
                        state[parent] = GREY
                        stack.append((parent, iter(self._parents.get(parent, ()))))
                        advanced = True
                        break
                if not advanced:
                    state[node] = BLACK
                    stack.pop()

    # -- loaders -----------------------------------------------------------

    @classmethod
    def load(cls, synsets_path=None, hypernyms_path=None) -> "LexicalDatabase":
        """Load the TSV pair; bundled desk-scale database when paths are None."""
        syn_src = asset_path("synsets.tsv") if synsets_path is None else Path(synsets_path)
        hyp_src = asset_path("hypernyms.tsv") if hypernyms_path is None else Path(hypernyms_path)

        synsets: dict[str, tuple[str, list[str]]] = {}
        for line in syn_src.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line:
                continue
            sid, category, joined = line.split("\t")
            synsets[sid] = (category, [w.strip() for w in joined.split(",") if w.strip()])

        hypernyms: dict[str, list[str]] = defaultdict(list)
        for line in hyp_src.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line:
                continue
            child, parent = line.split("\t")
            hypernyms[child].append(parent)

        db = cls(synsets, dict(hypernyms))
        db.validate_acyclic()
        return db

    @classmethod
    def from_wordnet_dir(cls, directory) -> "LexicalDatabase":
        """Import WordNet 3.0 ``data.noun`` / ``data.verb`` / ``data.adj`` /
        ``data.adv`` files found under ``directory``.

        Lemma lookups stay surface-exact: inflected forms match only if the
        database lists them. Adjective satellites fold into category 'a'.
        """
        directory = Path(directory)
        synsets: dict[str, tuple[str, list[str]]] = {}
        hypernyms: dict[str, list[str]] = {}
        found = False
        for filename, category in _WORDNET_FILES.items():
            path = directory / filename
            if not path.exists():
                continue
            found = True
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    if line.startswith("  ") or not line.strip():
                        continue  # license header
                    sid, lemmas, parents = _parse_wordnet_line(line, category)
                    synsets[sid] = (category, lemmas)
                    if parents:
                        hypernyms[sid] = parents
        if not found:
            raise FileNotFoundError(f"no WordNet data.* files under {directory}")
        # Drop pointers to offsets outside the loaded files (partial imports).
        pruned = {
            child: [p for p in parents if p in synsets]
            for child, parents in hypernyms.items()
            if child in synsets
        }
        return cls(synsets, {c: ps for c, ps in pruned.items() if ps})


def _parse_wordnet_line(line: str, category: str) -> tuple[str, list[str], list[str]]:
    data = line.split("|")[0].split()
    offset = data[0]
    ss_type = data[2]
    pos = "a" if ss_type == "s" else ss_type
    w_cnt = int(data[3], 16)
    lemmas = []
    cursor = 4
    for _ in range(w_cnt):
        word = data[cursor]
        word = word.split("(")[0]  # strip adjective syntax markers
        lemmas.append(word.lower())
        cursor += 2  # skip lex_id
    p_cnt = int(data[cursor])
    cursor += 1
    parents = []
    for _ in range(p_cnt):
        symbol, target_offset, target_pos = data[cursor], data[cursor + 1], data[cursor + 2]
        cursor += 4  # symbol, offset, pos, source/target
        if symbol in _HYPERNYM_POINTERS:
            tp = "a" if target_pos == "s" else target_pos
            parents.append(f"{target_offset}-{tp}")
    return f"{offset}-{pos}", lemmas, parents


def path_similarity(db: LexicalDatabase, a: str, b: str) -> float | None:
    """``1 / (1 + shortest path)`` between two same-category synsets.

    Returns None when no path exists. Raises UnknownSynset / CategoryMismatch
    on bad inputs.
    """
    cat_a = db.category(a)
    cat_b = db.category(b)
    if cat_a != cat_b:
        raise CategoryMismatch(f"{a!r} is {cat_a!r}, {b!r} is {cat_b!r}")
    if a == b:
        return 1.0
    # breadth-first search over the undirected hypernym graph
    seen = {a}
    frontier = deque([(a, 0)])
    while frontier:
        node, dist = frontier.popleft()
        for nxt in db.neighbors(node):
            if nxt == b:
                return 1.0 / (2 + dist)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, dist + 1))
    return None
