"""Convoluções entre funções e operadores, normas e desigualdades de Young.

Convenções (peso ``w = 1/N``):

* ``(f ∗ g)(y) = w Σ_x f(x) g(y − x)``
* ``f ∗ A = w Σ_x f(x) α_x(A)``
* ``(A ∗ B)(x) = tr(A α_x(R B R))``
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple, Union

import numpy as np
from scipy import linalg

from .espaco_fase import EspacoFase, PontoLike
from .representacao import Operador, Representacao, deslocamentos, refletir

logger = logging.getLogger(__name__)

Escalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class FuncaoFase:
    """Função complexa em ``Ξ``, armazenada na ordem canônica dos pontos."""

    espaco: EspacoFase
    valores: np.ndarray

    def __post_init__(self) -> None:
        valores = np.array(self.valores, dtype=complex).reshape(-1)
        if valores.shape != (self.espaco.num_pontos,):
            raise ValueError(
                f"Função com {valores.size} valores; |Ξ| = {self.espaco.num_pontos}"
            )
        if not np.all(np.isfinite(valores)):
            raise ValueError("Função contém valores não finitos")
        valores.setflags(write=False)
        object.__setattr__(self, "valores", valores)

    @classmethod
    def constante(cls, espaco: EspacoFase, valor: Escalar = 1.0):
        return cls(espaco, np.full(espaco.num_pontos, complex(valor)))

    @classmethod
    def indicadora(cls, espaco: EspacoFase, ponto: PontoLike = 0):
        valores = np.zeros(espaco.num_pontos, dtype=complex)
        valores[espaco.indice(ponto)] = 1
        return cls(espaco, valores)

    def __call__(self, ponto: PontoLike) -> complex:
        return complex(self.valores[self.espaco.indice(ponto)])

    def _valores_de(self, outro) -> np.ndarray:
        if isinstance(outro, FuncaoFase):
            if not self.espaco.compativel(outro.espaco):
                raise ValueError("Funções definidas sobre espaços de fase diferentes")
            return outro.valores
        return NotImplemented

    def _nova(self, valores: np.ndarray):
        return type(self)(self.espaco, valores)

    def __add__(self, outro):
        valores = self._valores_de(outro)
        if valores is NotImplemented:
            return NotImplemented
        return self._nova(self.valores + valores)

    def __sub__(self, outro):
        valores = self._valores_de(outro)
        if valores is NotImplemented:
            return NotImplemented
        return self._nova(self.valores - valores)

    def __neg__(self):
        return self._nova(-self.valores)

    def __mul__(self, outro):
        if isinstance(outro, FuncaoFase):
            return self._nova(self.valores * self._valores_de(outro))
        if isinstance(outro, Operador):
            return NotImplemented
        return self._nova(self.valores * complex(outro))

    __rmul__ = __mul__

    def __truediv__(self, escalar):
        return self._nova(self.valores / complex(escalar))

    def conjugada(self):
        return self._nova(self.valores.conj())


@dataclass(frozen=True, eq=False)
class ElementoMisto:
    """Elemento ``(f, A)`` de ``L¹(Ξ) ⊕ T¹``."""

    funcao: FuncaoFase
    operador: Operador

    def __post_init__(self) -> None:
        if self.operador.dim != self.funcao.espaco.grupo.tamanho:
            raise ValueError(
                f"Operador de dimensão {self.operador.dim} incompatível com N = {self.funcao.espaco.grupo.tamanho}"
            )

    def __add__(self, outro: "ElementoMisto") -> "ElementoMisto":
        return ElementoMisto(self.funcao + outro.funcao, self.operador + outro.operador)

    def __mul__(self, escalar: Escalar) -> "ElementoMisto":
        return ElementoMisto(self.funcao * escalar, self.operador * escalar)

    __rmul__ = __mul__

    def norma(self) -> float:
        return norma_lp(self.funcao, 1) + norma_schatten(self.operador, 1)


def _mesmo_espaco(rep: Representacao, *funcoes: FuncaoFase) -> None:
    for f in funcoes:
        if not rep.espaco.compativel(f.espaco):
            raise ValueError("Função definida sobre um espaço de fase diferente do da representação")


def identidade_convolucao(espaco: EspacoFase) -> FuncaoFase:
    """``δ̃ = N·1_{0}``, unidade de ``∗`` na medida de Haar ``1/N``."""

    valores = np.zeros(espaco.num_pontos, dtype=complex)
    valores[0] = espaco.grupo.tamanho
    return FuncaoFase(espaco, valores)


def deslocar_funcao(f: FuncaoFase, ponto: PontoLike) -> FuncaoFase:
    """``α_z f(y) = f(y − z)``."""

    espaco = f.espaco
    return f._nova(f.valores[espaco.diferenca[:, espaco.indice(ponto)]])


def refletir_funcao(f: FuncaoFase) -> FuncaoFase:
    """``β f(y) = f(−y)``."""

    return f._nova(f.valores[f.espaco.negativo])


def convolucao_ff(f: FuncaoFase, g: FuncaoFase) -> FuncaoFase:
    if not f.espaco.compativel(g.espaco):
        raise ValueError("Funções definidas sobre espaços de fase diferentes")
    espaco = f.espaco
    return FuncaoFase(espaco, espaco.peso * (g.valores[espaco.diferenca] @ f.valores))


def convolucao_fa(rep: Representacao, f: FuncaoFase, A: Operador) -> Operador:
    """``f ∗ A = w Σ_x f(x) α_x(A)``; ``A ∗ f`` é o mesmo operador."""

    _mesmo_espaco(rep, f)
    return Operador(rep.espaco.peso * np.tensordot(f.valores, deslocamentos(rep, A), axes=1))


def convolucao_ab(rep: Representacao, A: Operador, B: Operador) -> FuncaoFase:
    """``(A ∗ B)(x) = tr(A α_x(β B))``."""

    if A.dim != rep.dim:
        raise ValueError(f"Operador A de dimensão {A.dim} incompatível com N = {rep.dim}")
    desl = deslocamentos(rep, refletir(rep, B))
    return FuncaoFase(rep.espaco, np.einsum("ij,xji->x", A.matriz, desl))


def produto_banach(rep: Representacao, u: ElementoMisto, v: ElementoMisto) -> ElementoMisto:
    """``(f, A)·(g, B) = (f∗g + A∗B, f∗B + g∗A)``."""

    funcao = convolucao_ff(u.funcao, v.funcao) + convolucao_ab(rep, u.operador, v.operador)
    operador = convolucao_fa(rep, u.funcao, v.operador) + convolucao_fa(rep, v.funcao, u.operador)
    return ElementoMisto(funcao, operador)


def _validar_expoente(p: float) -> float:
    p = float(p)
    if math.isnan(p) or p < 1:
        raise ValueError(f"Expoente p = {p} inválido: exige-se p ≥ 1")
    return p


def norma_schatten(A: Operador, p: float) -> float:
    p = _validar_expoente(p)
    valores = linalg.svdvals(A.matriz)
    if math.isinf(p):
        return float(valores.max(initial=0.0))
    return float(np.sum(valores ** p) ** (1.0 / p))


def norma_lp(f: FuncaoFase, p: float) -> float:
    p = _validar_expoente(p)
    modulo = np.abs(f.valores)
    if math.isinf(p):
        return float(modulo.max(initial=0.0))
    return float((f.espaco.peso * np.sum(modulo ** p)) ** (1.0 / p))


def elevar_funcao_posicao(espaco: EspacoFase, valores_g) -> FuncaoFase:
    """``f₀(x, ξ) = f(x)`` a partir de ``f: G → C``."""

    valores_g = np.asarray(valores_g, dtype=complex).reshape(-1)
    if valores_g.shape != (espaco.grupo.tamanho,):
        raise ValueError(f"Esperados {espaco.grupo.tamanho} valores sobre G; recebidos {valores_g.size}")
    return FuncaoFase(espaco, np.repeat(valores_g, espaco.grupo.tamanho))


def operador_multiplicacao(rep: Representacao, valores_g) -> Operador:
    """``M_f = f₀ ∗ (e₀ ⊗ e₀)``, o operador de multiplicação por ``f``."""

    f0 = elevar_funcao_posicao(rep.espaco, valores_g)
    e0 = np.zeros(rep.dim)
    e0[0] = 1
    return convolucao_fa(rep, f0, Operador.posto_um(e0))


def limite_convolucao_posto_um(
    rep: Representacao, A: Operador, phi, psi
) -> Tuple[float, float]:
    """``(w Σ_x |⟨A U_x* φ, U_x* ψ⟩|, ‖A‖·‖φ‖·‖ψ‖)``; o primeiro nunca excede o segundo."""

    phi = np.asarray(phi, dtype=complex)
    psi = np.asarray(psi, dtype=complex)
    adjuntos = rep.unitarios.conj().transpose(0, 2, 1)
    u_phi = adjuntos @ phi
    u_psi = adjuntos @ psi
    # ⟨A u, v⟩ = Σ (A u) conj(v)
    produtos = np.einsum("ij,xj,xi->x", A.matriz, u_phi, u_psi.conj())
    esquerda = rep.espaco.peso * float(np.sum(np.abs(produtos)))
    direita = norma_schatten(A, math.inf) * float(np.linalg.norm(phi) * np.linalg.norm(psi))
    return esquerda, direita


RECIPROCOS: Dict[Fraction, float] = {
    Fraction(1): 1.0,
    Fraction(3, 4): 4.0 / 3.0,
    Fraction(1, 2): 2.0,
    Fraction(1, 4): 4.0,
    Fraction(0): math.inf,
}


def combinacoes_young() -> List[Tuple[float, float, float]]:
    """Triplas ``(p, q, r)`` da grade com ``1/r = 1/p + 1/q − 1``."""

    triplas = []
    for ip, iq in itertools.product(RECIPROCOS, repeat=2):
        ir = ip + iq - 1
        if ir in RECIPROCOS:
            triplas.append((RECIPROCOS[ip], RECIPROCOS[iq], RECIPROCOS[ir]))
    return triplas


@dataclass
class RelatorioDesigualdades:
    tentativas: int
    verificacoes: int = 0
    violacoes: int = 0
    pior_razao: float = 0.0
    exemplos: List[dict] = field(default_factory=list)

    @property
    def aprovado(self) -> bool:
        return self.violacoes == 0

    def registrar(self, rotulo: str, expoentes, esquerda: float, direita: float, folga: float) -> None:
        self.verificacoes += 1
        if direita > 0:
            self.pior_razao = max(self.pior_razao, esquerda / direita)
        if esquerda > direita + folga * max(1.0, direita):
            self.violacoes += 1
            if len(self.exemplos) < 5:
                self.exemplos.append(
                    {"desigualdade": rotulo, "expoentes": list(expoentes), "lhs": esquerda, "rhs": direita}
                )

    def como_dicionario(self) -> dict:
        return {
            "tentativas": self.tentativas,
            "verificacoes": self.verificacoes,
            "violacoes": self.violacoes,
            "pior_razao": self.pior_razao,
            "exemplos": self.exemplos,
            "aprovado": self.aprovado,
        }


def verificar_young(
    rep: Representacao,
    rng: np.random.Generator,
    tentativas: int = 200,
    folga: float = 1e-9,
) -> RelatorioDesigualdades:
    """Confere as quatro desigualdades de Young em toda a grade de expoentes."""

    from .amostras import funcao_aleatoria, operador_aleatorio

    relatorio = RelatorioDesigualdades(tentativas)
    triplas = combinacoes_young()
    expoentes = sorted(set(RECIPROCOS.values()))
    for _ in range(tentativas):
        f = funcao_aleatoria(rng, rep.espaco)
        g = funcao_aleatoria(rng, rep.espaco)
        A = operador_aleatorio(rng, rep.dim)
        B = operador_aleatorio(rng, rep.dim)
        fg = convolucao_ff(f, g)
        fB = convolucao_fa(rep, f, B)
        Ag = convolucao_fa(rep, g, A)
        AB = convolucao_ab(rep, A, B)

        nf = {p: norma_lp(f, p) for p in expoentes}
        ng = {p: norma_lp(g, p) for p in expoentes}
        nA = {p: norma_schatten(A, p) for p in expoentes}
        nB = {p: norma_schatten(B, p) for p in expoentes}
        for p, q, r in triplas:
            relatorio.registrar("f*g", (p, q, r), norma_lp(fg, r), nf[p] * ng[q], folga)
            relatorio.registrar("f*B", (p, q, r), norma_schatten(fB, r), nf[p] * nB[q], folga)
            relatorio.registrar("A*g", (p, q, r), norma_schatten(Ag, r), nA[p] * ng[q], folga)
            relatorio.registrar("A*B", (p, q, r), norma_lp(AB, r), nA[p] * nB[q], folga)
    if relatorio.violacoes:
        logger.warning("Young: %d violações em %d verificações", relatorio.violacoes, relatorio.verificacoes)
    return relatorio


@dataclass
class RelatorioPositividade:
    tentativas: int
    menor_autovalor_fa: float
    menor_valor_ab: float
    maior_parte_imaginaria_ab: float
    menor_autovalor_gb: float
    falhas_detector: int
    aprovado: bool

    def como_dicionario(self) -> dict:
        return {
            "tentativas": self.tentativas,
            "menor_autovalor_fa": self.menor_autovalor_fa,
            "menor_valor_ab": self.menor_valor_ab,
            "maior_parte_imaginaria_ab": self.maior_parte_imaginaria_ab,
            "menor_autovalor_gb": self.menor_autovalor_gb,
            "falhas_detector": self.falhas_detector,
            "aprovado": self.aprovado,
        }


def detectar_nao_positividade(
    rep: Representacao, A: Operador
) -> Tuple[float, Operador, int]:
    """Procura um projetor ``P`` com ``(A ∗ P)(x) < 0`` para algum ``x``.

    Os candidatos são os projetores sobre ``R v`` para os autovetores ``v`` da
    parte hermitiana de ``A``; devolve o menor valor encontrado, o projetor e o ponto.
    """

    hermitiana = (A.matriz + A.matriz.conj().T) / 2
    _, vetores = np.linalg.eigh(hermitiana)
    melhor: Tuple[float, Operador, int] = (math.inf, Operador.zero(rep.dim), 0)
    for v in vetores.T:
        projetor = Operador.posto_um(rep.paridade @ v)
        valores = convolucao_ab(rep, A, projetor).valores.real
        ponto = int(np.argmin(valores))
        if valores[ponto] < melhor[0]:
            melhor = (float(valores[ponto]), projetor, ponto)
    return melhor


def verificar_positividade(
    rep: Representacao,
    rng: np.random.Generator,
    tentativas: int = 100,
    tol: float = 1e-10,
) -> RelatorioPositividade:
    """Convoluções de positivos são positivas; operadores indefinidos são detectados."""

    from .amostras import (
        funcao_positiva_aleatoria,
        indefinido_aleatorio,
        positivo_aleatorio,
    )

    menor_fa = math.inf
    menor_ab = math.inf
    maior_imag = 0.0
    menor_gb = math.inf
    falhas = 0
    for _ in range(tentativas):
        A = positivo_aleatorio(rng, rep.dim)
        B = positivo_aleatorio(rng, rep.dim)
        f = funcao_positiva_aleatoria(rng, rep.espaco)
        menor_fa = min(menor_fa, convolucao_fa(rep, f, A).menor_autovalor())
        ab = convolucao_ab(rep, A, B).valores
        menor_ab = min(menor_ab, float(ab.real.min()))
        maior_imag = max(maior_imag, float(np.abs(ab.imag).max()))
        g = funcao_positiva_aleatoria(rng, rep.espaco)
        menor_gb = min(menor_gb, convolucao_fa(rep, g, B).menor_autovalor())

        indefinido = indefinido_aleatorio(rng, rep.dim)
        valor, _, _ = detectar_nao_positividade(rep, indefinido)
        if not valor < -tol:
            falhas += 1

    aprovado = (
        min(menor_fa, menor_ab, menor_gb) >= -tol and maior_imag <= tol and falhas == 0
    )
    return RelatorioPositividade(
        tentativas, menor_fa, menor_ab, maior_imag, menor_gb, falhas, aprovado
    )
