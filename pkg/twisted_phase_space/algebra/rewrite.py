from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import sort_key
from twisted_phase_space.algebra.series import DeformSeries
from twisted_phase_space.algebra.scalar import ONE

DEFAULT_BUDGET = 2_000_000
DEFAULT_MEMO_LIMIT = 100_000


class RewriteBudgetExceeded(RuntimeError):
    pass


class RewriteRuleset:
    """Commutation rules g1 g2 -> g2 g1 + [g1, g2] for out-of-order pairs.

    `brackets` maps (g1, g2) with sort_key(g1) > sort_key(g2) to the NCExpr
    [g1, g2]; absent pairs commute. Normal forms of single words are memoized
    per ruleset; the memo is dropped once it holds `memo_limit` words. A
    frozen ruleset (the shared cached ones) rejects new rules.
    """

    def __init__(self, brackets=None, name='', budget=DEFAULT_BUDGET, memo_limit=DEFAULT_MEMO_LIMIT):
        self.name = name
        self.budget = budget
        self.memo_limit = memo_limit
        self.frozen = False
        self.brackets = {}
        for (g1, g2), rhs in (brackets or {}).items():
            self.add(g1, g2, rhs)
        self._memo = {}

    def freeze(self):
        self.frozen = True
        return self

    def add(self, g1, g2, rhs):
        if self.frozen:
            raise RuntimeError(f'Ruleset {self.name} is frozen')
        if sort_key(g1) == sort_key(g2):
            return
        if sort_key(g1) < sort_key(g2):
            g1, g2, rhs = g2, g1, -rhs
        if rhs:
            self.brackets[(g1, g2)] = rhs
        else:
            self.brackets.pop((g1, g2), None)
        self._memo = {}

    def bracket(self, g1, g2):
        """[g1, g2] for any pair, or None when they commute."""
        if sort_key(g1) > sort_key(g2):
            return self.brackets.get((g1, g2))
        rhs = self.brackets.get((g2, g1))
        return -rhs if rhs is not None else None

    def union(self, *others, name=None):
        merged = RewriteRuleset(self.brackets, name or self.name, self.budget, self.memo_limit)
        for other in others:
            merged.brackets.update(other.brackets)
        return merged

    def __len__(self):
        return len(self.brackets)

    def normal_word(self, word, order=None):
        """Normal form of one word as {word: DeformSeries}."""
        steps = [0]
        return self._normal_word(tuple(word), order, steps, set())

    def _remember(self, key, result):
        if len(self._memo) >= self.memo_limit:
            self._memo.clear()
        self._memo[key] = result

    def _normal_word(self, word, order, steps, active):
        key = (word, order)
        if key in self._memo:
            return self._memo[key]
        descent = None
        for i in range(len(word) - 1):
            if sort_key(word[i]) > sort_key(word[i + 1]):
                descent = i
                break
        if descent is None:
            result = {word: DeformSeries.constant(ONE, order)}
            self._remember(key, result)
            return result

        if key in active:
            raise RewriteBudgetExceeded(f'rewrite budget exceeded: cycle at {word}')
        steps[0] += 1
        if steps[0] > self.budget:
            raise RewriteBudgetExceeded(f'rewrite budget exceeded after {self.budget} steps')
        active.add(key)

        g1, g2 = word[descent], word[descent + 1]
        head, tail = word[:descent], word[descent + 2:]
        result = dict(self._normal_word(head + (g2, g1) + tail, order, steps, active))
        rhs = self.brackets.get((g1, g2))
        if rhs is not None:
            for rhs_word, rhs_coeff in rhs.terms.items():
                if order is not None:
                    rhs_coeff = rhs_coeff.truncate(order)
                    if not rhs_coeff:
                        continue
                sub = self._normal_word(head + rhs_word + tail, order, steps, active)
                for w, c in sub.items():
                    coeff = c * rhs_coeff
                    result[w] = result[w] + coeff if w in result else coeff
        result = {w: c for w, c in result.items() if c}

        active.discard(key)
        self._remember(key, result)
        return result


def normal_order(expr, rules):
    """Canonical form of an NCExpr under a ruleset (same input -> same output)."""
    order = expr.order
    terms = {}
    for word, coeff in expr.terms.items():
        for w, c in rules.normal_word(word, order).items():
            value = coeff * c
            terms[w] = terms[w] + value if w in terms else value
    return NCExpr(terms, order)


def multiply(lhs, rhs, rules):
    return normal_order(lhs * rhs, rules)


def commutator(lhs, rhs, rules):
    return normal_order(lhs * rhs - rhs * lhs, rules)
