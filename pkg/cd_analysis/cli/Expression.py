"""
Formulas given on the command line, parsed once and evaluated against CdNumber.

    expr    = term , { ( "+" | "-" ) , term } ;
    term    = unary , { ( "*" | "/" ) , unary } ;
    unary   = ( "-" | "+" ) , unary | power ;
    power   = atom , [ "^" , unary ] ;
    atom    = number | constant | generator | variable | function , "(" , expr , ")" | "(" , expr , ")" ;

Products and quotients associate to the left, a / b is a b^{-1}. A chain of three or more
factors that may be nonreal (they mention a generator or a variable) must be parenthesized,
e.g. (i1 * z) * i2.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
import re
from typing import Any, Callable


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import ExpressionError
from cd_analysis.special.gamma import digamma, gamma, gamma_reciprocal
from cd_analysis.special.xi import upsilon, xi
from cd_analysis.special.zeta import chi, zeta
from cd_analysis.transcend.elementary import cos, exp, ln, plane_apply, power, sin
from cd_analysis.transcend.iterated import E


VARIABLES = ("t", "z", "p", "y")
CONSTANTS = {"pi": math.pi, "e": math.e}
MAX_CHAIN_NONREAL = 2

_TOKEN = re.compile(r"\s*(?:(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")
_GENERATOR = re.compile(r"i([1-7])")


@dataclass(frozen=True)
class _Env:
    values: dict[str, CdNumber]
    level: int
    branch: int


FUNCTIONS: dict[str, Callable[[CdNumber, _Env], CdNumber]] = {
    "exp": lambda z, env: exp(z),
    "ln": lambda z, env: ln(z, env.branch),
    "sin": lambda z, env: sin(z),
    "cos": lambda z, env: cos(z),
    "sqrt": lambda z, env: plane_apply(cmath.sqrt, z),
    "abs": lambda z, env: CdNumber.real(z.norm()),
    "re": lambda z, env: CdNumber.real(z.re),
    "conj": lambda z, env: z.conj(),
    "step": lambda z, env: CdNumber.real(1.0 if z.re >= 0.0 else 0.0),
    "E": lambda z, env: E(z, max(2, env.level)),
    "gamma": lambda z, env: gamma(z),
    "rgamma": lambda z, env: gamma_reciprocal(z),
    "digamma": lambda z, env: digamma(z),
    "zeta": lambda z, env: zeta(z),
    "chi": lambda z, env: chi(z),
    "xi": lambda z, env: xi(z),
    "upsilon": lambda z, env: upsilon(z),
}


# Syntax tree

@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Generator:
    index: int


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Call:
    name: str
    arg: Any


@dataclass(frozen=True)
class Negate:
    operand: Any


@dataclass(frozen=True)
class Binary:
    op: str
    left: Any
    right: Any


def _maybe_nonreal(node: Any) -> bool:
    match node:
        case Generator() | Variable():
            return True
        case Number():
            return False
        case Call(arg=arg) | Negate(operand=arg):
            return _maybe_nonreal(arg)
        case Binary(left=left, right=right):
            return _maybe_nonreal(left) or _maybe_nonreal(right)


def _free_variables(node: Any) -> set[str]:
    match node:
        case Variable(name=name):
            return {name}
        case Call(arg=arg) | Negate(operand=arg):
            return _free_variables(arg)
        case Binary(left=left, right=right):
            return _free_variables(left) | _free_variables(right)
        case _:
            return set()


class _Parser:

    def __init__(self, text: str, variables: tuple[str, ...], level: int):
        self.text = text
        self.variables = variables
        self.level = level
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list[tuple[str, str, int]]:
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            match = _TOKEN.match(text, pos)
            if match is None:
                raise ExpressionError(f"Unexpected character '{text[pos:].lstrip()[0]}' at {pos} in '{text}'")
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), match.start(kind)))
            pos = match.end()
        return tokens

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, op: str | None = None) -> tuple[str, str, int]:
        token = self._peek()
        if token is None:
            raise ExpressionError(f"Unexpected end of '{self.text}'")
        if op is not None and token[1] != op:
            raise ExpressionError(f"Expected '{op}' at {token[2]} in '{self.text}', got '{token[1]}'")
        self.pos += 1
        return token

    def _at(self, *ops: str) -> bool:
        token = self._peek()
        return token is not None and token[0] == "op" and token[1] in ops

    def parse(self) -> Any:
        if not self.tokens:
            raise ExpressionError("Empty expression")
        node = self._expr()
        if self._peek() is not None:
            token = self._peek()
            raise ExpressionError(f"Unexpected '{token[1]}' at {token[2]} in '{self.text}'")
        return node

    def _expr(self) -> Any:
        node = self._term()
        while self._at("+", "-"):
            op = self._take()[1]
            node = Binary(op, node, self._term())
        return node

    def _term(self) -> Any:
        factors = [self._unary()]
        ops = []
        while self._at("*", "/"):
            ops.append(self._take()[1])
            factors.append(self._unary())
        if sum(_maybe_nonreal(f) for f in factors) > MAX_CHAIN_NONREAL:
            raise ExpressionError(f"Parenthesize products of more than {MAX_CHAIN_NONREAL} nonreal factors in '{self.text}'")
        node = factors[0]
        for op, factor in zip(ops, factors[1:]):
            node = Binary(op, node, factor)
        return node

    def _unary(self) -> Any:
        if self._at("-"):
            self._take()
            return Negate(self._unary())
        if self._at("+"):
            self._take()
            return self._unary()
        return self._power()

    def _power(self) -> Any:
        base = self._atom()
        if self._at("^"):
            self._take()
            return Binary("^", base, self._unary())
        return base

    def _atom(self) -> Any:
        kind, text, pos = self._take()
        if kind == "number":
            return Number(float(text))
        if kind == "op":
            if text != "(":
                raise ExpressionError(f"Unexpected '{text}' at {pos} in '{self.text}'")
            node = self._expr()
            self._take(")")
            return node
        if text in FUNCTIONS:
            self._take("(")
            node = self._expr()
            self._take(")")
            return Call(text, node)
        if text in CONSTANTS:
            return Number(CONSTANTS[text])
        generator = _GENERATOR.fullmatch(text)
        if generator:
            j = int(generator.group(1))
            if j >= 2 ** self.level:
                raise ExpressionError(f"Generator {text} does not exist at level {self.level}")
            return Generator(j)
        if text in self.variables:
            return Variable(text)
        raise ExpressionError(f"Unknown name '{text}' at {pos} in '{self.text}'; variables here are {self.variables}")


def _evaluate(node: Any, env: _Env) -> CdNumber:
    match node:
        case Number(value=value):
            return CdNumber.real(value)
        case Generator(index=j):
            return CdNumber.basis(j, env.level)
        case Variable(name=name):
            return env.values[name]
        case Negate(operand=operand):
            return -_evaluate(operand, env)
        case Call(name=name, arg=arg):
            return CdNumber.coerce(FUNCTIONS[name](_evaluate(arg, env), env))
        case Binary(op="^", left=left, right=right):
            base, exponent = _evaluate(left, env), _evaluate(right, env)
            if exponent.is_real() and float(exponent.re).is_integer():
                return base ** int(exponent.re)
            return power(base, exponent, env.branch)
        case Binary(op=op, left=left, right=right):
            a, b = _evaluate(left, env), _evaluate(right, env)
            match op:
                case "+":
                    return a + b
                case "-":
                    return a - b
                case "*":
                    return a * b
                case _:
                    return a / b


class Expression:
    """
    A parsed formula.

    Example:
    >>> f = Expression("1/(z-y)", variables=("z", "y"))
    >>> f.evaluate({"z": 2.0, "y": 1.0})
    CdNumber(level=0, coeffs=[1.0])
    """

    def __init__(self, text: str, variables: tuple[str, ...] = VARIABLES, level: int = 2):
        unknown = set(variables) - set(VARIABLES)
        if unknown:
            raise ExpressionError(f"Unsupported variables {sorted(unknown)}, expected a subset of {VARIABLES}")
        self.text = text
        self.variables = tuple(variables)
        self.level = level
        self.tree = _Parser(text, self.variables, level).parse()
        self.free = frozenset(_free_variables(self.tree))

    def evaluate(self, values: dict[str, Any] | None = None, branch: int = 0) -> CdNumber:
        values = {name: CdNumber.coerce(value) for name, value in (values or {}).items()}
        missing = self.free - set(values)
        if missing:
            raise ExpressionError(f"No value for {sorted(missing)} in '{self.text}'")
        return _evaluate(self.tree, _Env(values, self.level, branch))

    def function(self, variable: str, branch: int = 0, **bound: Any) -> Callable[[Any], CdNumber]:
        """The formula as a function of one variable, the others fixed."""
        missing = self.free - set(bound) - {variable}
        if missing:
            raise ExpressionError(f"No value for {sorted(missing)} in '{self.text}'")
        bound = {name: CdNumber.coerce(value) for name, value in bound.items()}

        def f(x: Any) -> CdNumber:
            return _evaluate(self.tree, _Env({**bound, variable: CdNumber.coerce(x)}, self.level, branch))

        f.__name__ = self.text
        return f

    @classmethod
    def constant(cls, text: str, level: int = 2) -> CdNumber:
        """A formula without variables, e.g. a command-line point like 0.5+14.13*i2."""
        return cls(text, variables=(), level=level).evaluate()

    def __repr__(self) -> str:
        return f"Expression('{self.text}', variables={self.variables}, level={self.level})"
