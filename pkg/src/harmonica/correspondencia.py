"""Regras de correspondência ``Γ(f, A) = (A ∗ B1, f ∗ B2)`` e suas propriedades."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .convolucao import (
    ElementoMisto,
    FuncaoFase,
    convolucao_ab,
    convolucao_fa,
    deslocar_funcao,
    identidade_convolucao,
)
from .representacao import Operador, Representacao, deslocar

logger = logging.getLogger(__name__)

FUNCOES_CONVEXAS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "t2": np.square,
    "abs": np.abs,
    "exp": np.exp,
}


@dataclass(frozen=True, eq=False)
class RegraCorrespondencia:
    """Par de operadores densidade ``(B1, B2)``."""

    b1: Operador
    b2: Operador


def _validar_densidade(B: Operador, nome: str, tol: float) -> None:
    if not B.eh_hermitiano(tol):
        raise ValueError(f"{nome} não é hermitiano")
    if B.menor_autovalor() < -tol:
        raise ValueError(f"{nome} não é positivo semidefinido (menor autovalor {B.menor_autovalor():.3e})")
    if abs(B.traco() - 1) > tol:
        raise ValueError(f"{nome} deve ter traço 1; recebido {B.traco().real:.6g}")


def criar_regra(B1: Operador, B2: Operador, tol: float = 1e-9) -> RegraCorrespondencia:
    if B1.dim != B2.dim:
        raise ValueError(f"B1 e B2 com dimensões diferentes: {B1.dim} e {B2.dim}")
    _validar_densidade(B1, "B1", tol)
    _validar_densidade(B2, "B2", tol)
    return RegraCorrespondencia(B1, B2)


def aplicar_regra(rep: Representacao, regra: RegraCorrespondencia, u: ElementoMisto) -> ElementoMisto:
    """``Γ(f, A) = (A ∗ B1, f ∗ B2)``."""

    return ElementoMisto(
        convolucao_ab(rep, u.operador, regra.b1),
        convolucao_fa(rep, u.funcao, regra.b2),
    )


def recuperar_densidades(
    rep: Representacao, canal: Callable[[ElementoMisto], ElementoMisto]
) -> Tuple[Operador, Operador]:
    """Recupera ``(B1, B2)`` de um canal covariante tratado como caixa-preta.

    ``B2 = Γ(δ̃, 0)`` e ``(E_ij ∗ B1)(0) = (R B1 R)_{ji}``.
    """

    n = rep.dim
    zero_f = FuncaoFase.constante(rep.espaco, 0)
    B2 = canal(ElementoMisto(identidade_convolucao(rep.espaco), Operador.zero(n))).operador
    refletida = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            E = np.zeros((n, n))
            E[i, j] = 1
            refletida[j, i] = canal(ElementoMisto(zero_f, Operador(E))).funcao.valores[0]
    R = rep.paridade
    return Operador(R @ refletida @ R), B2


@dataclass
class RelatorioRegra:
    tentativas: int
    desvio_covariancia: float
    menor_valor_positividade: float
    desvio_unidades: float
    menor_valor_kadison_schwarz: float
    desvio_kadison_unidade: float
    tol: float

    @property
    def aprovado(self) -> bool:
        return (
            self.desvio_covariancia <= self.tol
            and self.menor_valor_positividade >= -self.tol
            and self.desvio_unidades <= self.tol
            and self.menor_valor_kadison_schwarz >= -self.tol
            and self.desvio_kadison_unidade <= self.tol
        )

    def como_dicionario(self) -> dict:
        return {
            "tentativas": self.tentativas,
            "desvio_covariancia": self.desvio_covariancia,
            "menor_valor_positividade": self.menor_valor_positividade,
            "desvio_unidades": self.desvio_unidades,
            "menor_valor_kadison_schwarz": self.menor_valor_kadison_schwarz,
            "desvio_kadison_unidade": self.desvio_kadison_unidade,
            "aprovado": self.aprovado,
        }


def _produto_c_estrela(u: ElementoMisto, v: ElementoMisto) -> ElementoMisto:
    """Produto da álgebra ``L^∞ ⊕ L(H)``: ``(f, A)(g, B) = (fg, AB)``."""

    return ElementoMisto(u.funcao * v.funcao, u.operador @ v.operador)


def _adjunto_misto(u: ElementoMisto) -> ElementoMisto:
    return ElementoMisto(u.funcao.conjugada(), u.operador.adjunto())


def _desvio_kadison_schwarz(rep: Representacao, regra: RegraCorrespondencia, u: ElementoMisto) -> float:
    """Menor valor de ``Γ(u*u) − Γ(u)*Γ(u)``, relativo à escala de ``u``."""

    gu = aplicar_regra(rep, regra, u)
    guu = aplicar_regra(rep, regra, _produto_c_estrela(_adjunto_misto(u), u))
    diferenca = guu.funcao.valores - (gu.funcao.conjugada() * gu.funcao).valores
    operador = guu.operador - gu.operador.adjunto() @ gu.operador
    escala = max(1.0, float(np.abs(u.funcao.valores).max()) ** 2, float(np.abs(u.operador.matriz).max()) ** 2)
    return min(float(diferenca.real.min()), operador.menor_autovalor()) / escala


def verificar_regra(
    rep: Representacao,
    regra: RegraCorrespondencia,
    rng: np.random.Generator,
    tentativas: int = 50,
    tol: float = 1e-9,
) -> RelatorioRegra:
    """Covariância, positividade, troca de unidades e Kadison–Schwarz."""

    from .amostras import funcao_aleatoria, funcao_positiva_aleatoria, operador_aleatorio, positivo_aleatorio

    espaco = rep.espaco
    n = rep.dim
    covariancia = 0.0
    positividade = math.inf
    kadison = math.inf
    for _ in range(tentativas):
        f = funcao_aleatoria(rng, espaco)
        A = operador_aleatorio(rng, n)
        saida = aplicar_regra(rep, regra, ElementoMisto(f, A))
        x = int(rng.integers(espaco.num_pontos))
        deslocada = aplicar_regra(rep, regra, ElementoMisto(deslocar_funcao(f, x), deslocar(rep, x, A)))
        covariancia = max(
            covariancia,
            float(np.max(np.abs(deslocada.funcao.valores - deslocar_funcao(saida.funcao, x).valores))),
            float(np.max(np.abs(deslocada.operador.matriz - deslocar(rep, x, saida.operador).matriz))),
        )

        positiva = aplicar_regra(
            rep, regra, ElementoMisto(funcao_positiva_aleatoria(rng, espaco), positivo_aleatorio(rng, n))
        )
        positividade = min(positividade, float(positiva.funcao.valores.real.min()), positiva.operador.menor_autovalor())

        kadison = min(kadison, _desvio_kadison_schwarz(rep, regra, ElementoMisto(f, A)))

    um = FuncaoFase.constante(espaco, 1)
    zero_f = FuncaoFase.constante(espaco, 0)
    identidade = Operador.identidade(n)
    de_um = aplicar_regra(rep, regra, ElementoMisto(um, Operador.zero(n)))
    de_identidade = aplicar_regra(rep, regra, ElementoMisto(zero_f, identidade))
    unidades = max(
        float(np.max(np.abs(de_um.operador.matriz - np.eye(n)))),
        float(np.max(np.abs(de_um.funcao.valores))),
        float(np.max(np.abs(de_identidade.funcao.valores - 1))),
        float(np.max(np.abs(de_identidade.operador.matriz))),
    )

    unidade = ElementoMisto(um, identidade)
    gu = aplicar_regra(rep, regra, unidade)
    guu = aplicar_regra(rep, regra, _produto_c_estrela(unidade, unidade))
    igualdade = max(
        float(np.max(np.abs(guu.funcao.valores - (gu.funcao * gu.funcao).valores))),
        float(np.max(np.abs((guu.operador - gu.operador @ gu.operador).matriz))),
    )

    relatorio = RelatorioRegra(tentativas, covariancia, positividade, unidades, kadison, igualdade, tol)
    if not relatorio.aprovado:
        logger.warning("Regra de correspondência reprovada: %s", relatorio.como_dicionario())
    return relatorio


@dataclass
class RelatorioBerezinLieb:
    funcao_convexa: str
    operador_para_funcao: Tuple[float, float]
    funcao_para_operador: Tuple[float, float]
    forma_impressa: Tuple[float, float]
    tol: float

    @staticmethod
    def _vale(par: Tuple[float, float], tol: float) -> bool:
        esquerda, direita = par
        return esquerda <= direita + tol * max(1.0, abs(direita))

    @property
    def aprovado(self) -> bool:
        return self._vale(self.operador_para_funcao, self.tol) and self._vale(
            self.funcao_para_operador, self.tol
        )

    @property
    def forma_impressa_valida(self) -> bool:
        return self._vale(self.forma_impressa, self.tol)

    def como_dicionario(self) -> dict:
        return {
            "funcao_convexa": self.funcao_convexa,
            "operador_para_funcao": list(self.operador_para_funcao),
            "funcao_para_operador": list(self.funcao_para_operador),
            "forma_impressa": list(self.forma_impressa),
            "forma_impressa_valida": self.forma_impressa_valida,
            "aprovado": self.aprovado,
        }


def verificar_berezin_lieb(
    rep: Representacao,
    regra: RegraCorrespondencia,
    A: Operador,
    phi: str = "t2",
    f: Optional[FuncaoFase] = None,
    tol: float = 1e-9,
) -> RelatorioBerezinLieb:
    """Desigualdades de Berezin–Lieb para ``φ`` convexa do menu ``FUNCOES_CONVEXAS``.

    Lado operador → função: ``w Σ φ(A ∗ B1) ≤ tr φ(A)``. Lado função → operador:
    ``tr φ(f ∗ B2) ≤ w Σ φ(f)``; a forma ``φ(tr(f ∗ B2)) ≤ w Σ φ(f)`` é reportada à parte.
    Sem ``f`` usa-se ``f = A ∗ B1``.
    """

    try:
        funcao = FUNCOES_CONVEXAS[phi]
    except KeyError:
        raise ValueError(
            f"Função convexa desconhecida: '{phi}' (use {', '.join(FUNCOES_CONVEXAS)})"
        ) from None
    if not A.eh_hermitiano(tol):
        raise ValueError("Berezin–Lieb exige um operador hermitiano")
    peso = rep.espaco.peso

    imagem = convolucao_ab(rep, A, regra.b1).valores.real
    operador_para_funcao = (
        float(peso * funcao(imagem).sum()),
        float(funcao(np.linalg.eigvalsh(A.matriz)).sum()),
    )

    if f is None:
        f = FuncaoFase(rep.espaco, imagem)
    if np.max(np.abs(f.valores.imag)) > tol:
        raise ValueError("Berezin–Lieb exige uma função real")
    valores_f = f.valores.real
    integral = float(peso * funcao(valores_f).sum())
    saida = convolucao_fa(rep, f, regra.b2)
    hermitiana = (saida.matriz + saida.matriz.conj().T) / 2
    funcao_para_operador = (float(funcao(np.linalg.eigvalsh(hermitiana)).sum()), integral)
    forma_impressa = (float(funcao(np.array(saida.traco().real))), integral)

    return RelatorioBerezinLieb(phi, operador_para_funcao, funcao_para_operador, forma_impressa, tol)
