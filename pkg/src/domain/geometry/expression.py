"""
Set Expression Parser

집합 표현식 텍스트 ↔ SetSpec 트리

문법 (공백 무시):

    expr    := "counterexampleK"
             | "cube" "(" vector ";" number ")"        # vector = 하단 코너
             | "ball" "(" vector ";" number ")"        # vector = 중심
             | "translate" "(" expr ";" vector ")"
             | "union" "(" expr ("," expr)* ")"
             | "inter" "(" expr ("," expr)* ")"
             | "diff" "(" expr "," expr ")"
    vector  := number ("," number)*
    number  := ["-"] [decimal ["*"]] "pi" ["/" decimal]
             | ["-"] decimal [exponent]

예: diff(union(cube(0,0;2pi), ball(pi,0;pi)), ball(pi,2pi;pi))
"""
import math
import re
from dataclasses import dataclass
from typing import List, Optional

from src.core.exceptions import ExpressionSyntaxError
from src.domain.entities.setspec import (
    Ball, Cube, Difference, Intersection, SetSpec, Translate, Union, counterexample_k,
)

_DECIMAL = r"(?:\d+(?:\.\d*)?|\.\d+)"
_TOKEN_RE = re.compile(
    rf"(?P<ws>\s+)"
    rf"|(?P<pinum>-?(?:{_DECIMAL}\s*\*?\s*)?pi(?:\s*/\s*{_DECIMAL})?(?![A-Za-z0-9_]))"
    rf"|(?P<num>-?{_DECIMAL}(?:[eE][-+]?\d+)?)"
    rf"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    rf"|(?P<punct>[(),;])"
)
_PI_PARTS = re.compile(rf"(-?)\s*({_DECIMAL})?\s*\*?\s*pi(?:\s*/\s*({_DECIMAL}))?")

NAMED_SETS = {"counterexampleK": counterexample_k}


@dataclass
class _Token:
    kind: str
    text: str
    position: int


def _pi_value(text: str) -> float:
    match = _PI_PARTS.fullmatch(text.strip())
    sign, coeff, denom = match.groups()
    value = (float(coeff) if coeff else 1.0) * math.pi
    if denom:
        value /= float(denom)
    return -value if sign else value


def _tokenize(text: str) -> List[_Token]:
    tokens, pos = [], 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ExpressionSyntaxError(f"알 수 없는 문자 {text[pos]!r}", text, pos)
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    """재귀 하강 파서"""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _error(self, message: str, token: Optional[_Token] = None) -> ExpressionSyntaxError:
        token = token or self.current
        return ExpressionSyntaxError(message, self.text, token.position)

    def _expect(self, text: str) -> _Token:
        token = self.current
        if token.text != text:
            found = token.text or "end of input"
            raise self._error(f"'{text}'가 필요하지만 '{found}'를 만났습니다")
        self.index += 1
        return token

    def parse(self) -> SetSpec:
        spec = self._expr()
        if self.current.kind != "end":
            raise self._error(f"표현식 뒤에 불필요한 토큰 '{self.current.text}'")
        return spec

    def _number(self) -> float:
        token = self.current
        if token.kind == "pinum":
            value = _pi_value(token.text)
        elif token.kind == "num":
            value = float(token.text)
        else:
            raise self._error(f"숫자가 필요하지만 '{token.text or 'end of input'}'를 만났습니다")
        self.index += 1
        return value

    def _vector(self) -> List[float]:
        values = [self._number()]
        while self.current.text == ",":
            self.index += 1
            values.append(self._number())
        return values

    def _expr(self) -> SetSpec:
        token = self.current
        if token.kind != "name":
            raise self._error(f"집합 이름이 필요하지만 '{token.text or 'end of input'}'를 만났습니다")
        name = token.text
        self.index += 1

        if name in NAMED_SETS:
            return NAMED_SETS[name]()

        start = token
        self._expect("(")
        try:
            if name in ("cube", "ball"):
                vector = self._vector()
                self._expect(";")
                size = self._number()
                spec = (
                    Cube(tuple(v + size / 2 for v in vector), size)
                    if name == "cube"
                    else Ball(tuple(vector), size)
                )
            elif name == "translate":
                inner = self._expr()
                self._expect(";")
                spec = Translate(inner, tuple(self._vector()))
            elif name in ("union", "inter"):
                parts = [self._expr()]
                while self.current.text == ",":
                    self.index += 1
                    parts.append(self._expr())
                spec = Union(tuple(parts)) if name == "union" else Intersection(tuple(parts))
            elif name == "diff":
                first = self._expr()
                self._expect(",")
                spec = Difference(first, self._expr())
            else:
                raise self._error(f"알 수 없는 집합 '{name}'", start)
        except ExpressionSyntaxError:
            raise
        except ValueError as e:
            # primitive 생성자의 값 검증 오류에 위치를 붙임
            raise ExpressionSyntaxError(str(e), self.text, start.position) from e
        self._expect(")")
        return spec


def parse_expression(text: str) -> SetSpec:
    """
    집합 표현식 파싱

    Args:
        text: 표현식 (모듈 docstring의 문법)

    Returns:
        SetSpec

    Raises:
        ExpressionSyntaxError: 위치 정보 포함
    """
    return _Parser(text).parse()


def split_expressions(text: str) -> List[str]:
    """괄호 밖의 쉼표로 여러 표현식을 분리

    Example:
        split_expressions("ball(0,0;pi),cube(-pi,-pi;2pi)")
        → ["ball(0,0;pi)", "cube(-pi,-pi;2pi)"]
    """
    parts, depth, start = [], 0, 0
    for i, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ExpressionSyntaxError("닫는 괄호가 너무 많습니다", text, i)
        elif char == "," and depth == 0:
            parts.append(text[start:i].strip())
            start = i + 1
    if depth != 0:
        raise ExpressionSyntaxError("괄호가 닫히지 않았습니다", text, len(text))
    parts.append(text[start:].strip())
    return [part for part in parts if part]
