import json
from abc import ABC, abstractmethod

from twisted_phase_space.algebra.closed_form import ClosedForm, PARAMETER_LATEX, latex_coefficient
from twisted_phase_space.algebra.expression import NCExpr, word_latex, word_str
from twisted_phase_space.algebra.generators import GALILEAN_PHASE, RELATIVISTIC_PHASE, label, latex_label, parse_label
from twisted_phase_space.algebra.scalar import Scalar
from twisted_phase_space.algebra.series import DeformSeries
from twisted_phase_space.heisenberg_double.phase_space import PhaseRelation, PhaseSpaceTable
from twisted_phase_space.poincare.setup_carrier import carrier_from_params

FORMATS = ('text', 'json', 'latex')


def series_to_json(series):
    return {str(n): c.to_json() for n, c in series.items()}


def series_from_json(obj, order):
    coeffs = {int(n): Scalar.from_json(c) for n, c in obj.items()}
    top = max(coeffs, default=-1)
    return DeformSeries([coeffs.get(n, Scalar(0)) for n in range(top + 1)], order)


def expr_to_json(expr):
    return [{'word': [label(g) for g in word], 'coeff': series_to_json(expr.terms[word])}
            for word in sorted(expr.terms, key=word_str)]


def expr_from_json(obj, order):
    terms = {tuple(parse_label(g) for g in term['word']): series_from_json(term['coeff'], order) for term in obj}
    return NCExpr(terms, order)


def tensor_to_json(tensor):
    return [{'legs': [[label(g) for g in w] for w in key], 'coeff': series_to_json(tensor.terms[key])}
            for key in sorted(tensor.terms, key=lambda k: tuple(word_str(w) for w in k))]


def table_to_json(table):
    return {
        'carrier': table.carrier.to_params(),
        'order': table.order,
        'regime': table.regime,
        'parameter': table.parameter,
        'relations': [
            {
                'lhs': [label(g) for g in relation.lhs],
                'series': expr_to_json(relation.series),
                'closed_form': str(relation.closed_form) if relation.closed_form is not None else None,
                'closed_form_data': relation.closed_form.to_json() if relation.closed_form is not None else None,
            }
            for relation in table.entries()
        ],
    }


def parse_table(obj):
    """Inverse of table_to_json."""
    carrier = carrier_from_params(obj['carrier'])
    order = obj['order']
    generators = RELATIVISTIC_PHASE if obj['regime'] == 'relativistic' else GALILEAN_PHASE
    relations = {}
    for item in obj['relations']:
        lhs = tuple(parse_label(g) for g in item['lhs'])
        form = ClosedForm.from_json(item['closed_form_data']) if item['closed_form_data'] else None
        relations[lhs] = PhaseRelation(lhs, expr_from_json(item['series'], order), form)
    return PhaseSpaceTable(carrier, order, obj['regime'], obj['parameter'], generators, relations)


def series_latex(expr, parameter):
    """Truncated series with s = 1/(2 xi) written in xi."""
    xi = PARAMETER_LATEX[parameter]
    if expr.is_zero():
        return '0'
    parts = []
    for n, words in sorted(expr.series_view().items()):
        for word in sorted(words, key=word_str):
            value = words[word] / Scalar(2 ** n)
            body = '' if not word else ' ' + word_latex(word)
            parts.append(latex_coefficient(value, n, xi, bool(body)) + body)
    return ' + '.join(parts).replace('+ -', '- ')


class Emitter(ABC):
    """Renders a list of (kind, payload) sections into one deterministic document."""

    def emit(self, sections):
        return self._join([self._render(kind, payload) for kind, payload in sections])

    def _render(self, kind, payload):
        renderer = getattr(self, f'_render_{kind}', None)
        if renderer is None:
            raise ValueError(f'Incorrect section kind specified: {kind}')
        return renderer(payload)

    @abstractmethod
    def _join(self, rendered):
        pass


class TextEmitter(Emitter):

    def _join(self, rendered):
        return '\n\n'.join(rendered) + '\n'

    def _render_table(self, table):
        head = f'# {table.regime} phase space, carrier {table.carrier}, order {table.order}'
        return head + '\n' + str(table)

    def _render_coproducts(self, payload):
        carrier, order, coproducts = payload
        lines = [f'# twisted coproducts, carrier {carrier}, order {order}']
        for g, tensor in coproducts.items():
            lines.append(f'Delta({label(g)}) = {tensor}')
        return '\n'.join(lines)

    def _render_cross(self, relations):
        lines = ['# cross relations outside the phase-space table']
        for (q, r), expr in relations.items():
            lines.append(f'[{label(q)}, {label(r)}] = {expr}')
        return '\n'.join(lines)

    def _render_ledger(self, ledger):
        df = ledger.to_frame()[['relation', 'engine', 'reference', 'verdict']]
        counts = ', '.join(f'{k}={v}' for k, v in ledger.counts().items() if v)
        return f'# ledger {ledger.name}: {counts}\n' + df.to_string(index=False)

    def _render_report(self, report):
        lines = [f'# {report.summary()}']
        lines += [f'FAIL {row["subject"]} {row["detail"]}'.rstrip() for row in report.failures]
        return '\n'.join(lines)

    def _render_bounds(self, bounds):
        return '# uncertainty bounds\n' + '\n'.join(str(b) for b in bounds)

    def _render_numeric(self, report):
        lines = [f'# {report.summary()}', f'# {report.vector_fields.summary()}']
        return '\n'.join(lines)

    def _render_frame(self, payload):
        title, df = payload
        return f'# {title}\n' + df.to_string(index=False)


class JsonEmitter(Emitter):

    def _join(self, rendered):
        document = {}
        for key, value in rendered:
            if key in ('ledgers', 'reports'):
                document.setdefault(key, []).append(value)
            else:
                document[key] = value
        return json.dumps(document, indent=2) + '\n'

    def _render_table(self, table):
        return 'table', table_to_json(table)

    def _render_coproducts(self, payload):
        carrier, order, coproducts = payload
        return 'coproducts', {
            'carrier': carrier.to_params(),
            'order': order,
            'coproducts': {label(g): tensor_to_json(t) for g, t in coproducts.items()},
        }

    def _render_cross(self, relations):
        return 'cross_relations', [{'lhs': [label(q), label(r)], 'series': expr_to_json(e)}
                                   for (q, r), e in relations.items()]

    def _render_ledger(self, ledger):
        return 'ledgers', ledger.to_json()

    def _render_report(self, report):
        return 'reports', report.to_json()

    def _render_bounds(self, bounds):
        return 'bounds', [b.to_json() for b in bounds]

    def _render_numeric(self, report):
        return 'numeric', report.to_json()

    def _render_frame(self, payload):
        title, df = payload
        return title, json.loads(df.to_json(orient='records'))


class LatexEmitter(Emitter):

    def _join(self, rendered):
        return '\n\n'.join(rendered) + '\n'

    def _render_table(self, table):
        lines = [f'% {table.regime} phase space, carrier {table.carrier}, order {table.order}']
        for relation in table.entries():
            a, b = relation.lhs
            if relation.closed_form is not None:
                rhs = relation.closed_form.to_latex()
            else:
                rhs = series_latex(relation.series, table.parameter)
            lines.append(f'[{latex_label(a)}, {latex_label(b)}] = {rhs} \\\\')
        return '\n'.join(lines)

    def _render_coproducts(self, payload):
        carrier, order, coproducts = payload
        lines = [f'% twisted coproducts, carrier {carrier}, order {order}']
        for g, tensor in coproducts.items():
            terms = []
            for key in sorted(tensor.terms, key=lambda k: tuple(word_str(w) for w in k)):
                coeff = NCExpr.scalar(tensor.terms[key])
                legs = ' \\otimes '.join(word_latex(w) for w in key)
                terms.append(f'\\left({series_latex(coeff, "s")}\\right) {legs}')
            lines.append(f'\\Delta({latex_label(g)}) = ' + ' + '.join(terms) + ' \\\\')
        return '\n'.join(lines)

    def _render_cross(self, relations):
        lines = ['% cross relations outside the phase-space table']
        for (q, r), expr in relations.items():
            lines.append(f'[{latex_label(q)}, {latex_label(r)}] = {series_latex(expr, "s")} \\\\')
        return '\n'.join(lines)

    def _render_ledger(self, ledger):
        lines = [f'% ledger {ledger.name}', '\\begin{tabular}{lll}']
        for entry in ledger:
            relation = entry.relation.replace('_', '\\_')
            engine = entry.engine.replace('_', '\\_')
            lines.append(f'\\texttt{{{relation}}} & \\texttt{{{engine}}} & {entry.verdict} \\\\')
        lines.append('\\end{tabular}')
        return '\n'.join(lines)

    def _render_report(self, report):
        return f'% {report.summary()}'

    def _render_bounds(self, bounds):
        return '\n'.join(f'{b.to_latex()} \\\\' for b in bounds)

    def _render_numeric(self, report):
        return f'% {report.summary()}'

    def _render_frame(self, payload):
        title, df = payload
        return f'% {title}\n' + '\n'.join('% ' + line for line in df.to_string(index=False).splitlines())


def setup_emitter(fmt):
    if fmt == 'text':
        return TextEmitter()
    if fmt == 'json':
        return JsonEmitter()
    if fmt == 'latex':
        return LatexEmitter()
    raise ValueError(f'Incorrect format specified: {fmt}')
