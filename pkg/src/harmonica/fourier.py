"""Transformadas de Fourier simplética e de Fourier–Weyl, convolução torcida e Wigner."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from .convolucao import (
    FuncaoFase,
    convolucao_ab,
    convolucao_fa,
    convolucao_ff,
    deslocar_funcao,
    norma_lp,
    norma_schatten,
)
from .espaco_fase import EspacoFase
from .representacao import Operador, Representacao, deslocar

logger = logging.getLogger(__name__)


class FuncaoDual(FuncaoFase):
    """Função sobre o dual ``Ξ̂``, identificado com ``Ξ`` via ``σ``."""


def fourier_simpletico(f: FuncaoFase) -> FuncaoDual:
    """``F_σ(f)(ξ) = w Σ_x σ(x, ξ) f(x)``."""

    espaco = f.espaco
    return FuncaoDual(espaco, espaco.peso * (f.valores @ espaco.sigma))


def fourier_simpletico_inversa(F: FuncaoFase) -> FuncaoFase:
    """Inversa de ``F_σ``; a transformada simplética é uma involução."""

    espaco = F.espaco
    return FuncaoFase(espaco, espaco.peso * (F.valores @ espaco.sigma))


def fourier_weyl(rep: Representacao, A: Operador) -> FuncaoDual:
    """``F_U(A)(ξ) = tr(A U_ξ*)``."""

    if A.dim != rep.dim:
        raise ValueError(f"Operador de dimensão {A.dim} incompatível com N = {rep.dim}")
    return FuncaoDual(rep.espaco, np.einsum("ij,xij->x", A.matriz, rep.unitarios.conj()))


def fourier_weyl_inversa(rep: Representacao, F: FuncaoFase) -> Operador:
    """``F_U⁻¹(f) = w Σ_ξ f(ξ) U_ξ``."""

    if not rep.espaco.compativel(F.espaco):
        raise ValueError("Função definida sobre um espaço de fase diferente do da representação")
    return Operador(rep.espaco.peso * np.tensordot(F.valores, rep.unitarios, axes=1))


def _fator_adjunto(espaco: EspacoFase) -> np.ndarray:
    """``m(−x, x)`` para cada ``x``."""

    return espaco.matriz_multiplicador[espaco.negativo, np.arange(espaco.num_pontos)]


def adjunto_torcido(F: FuncaoFase) -> FuncaoFase:
    """``f^{*m}(x) = conj(f(−x) m(−x, x))``, espelho da adjunção de operadores."""

    espaco = F.espaco
    return F._nova((F.valores[espaco.negativo] * _fator_adjunto(espaco)).conj())


def convolucao_torcida(f: FuncaoFase, g: FuncaoFase) -> FuncaoDual:
    """``(f ∗_m g)(ξ) = w Σ_η f(ξ − η) g(η) m(ξ − η, η)``."""

    if not f.espaco.compativel(g.espaco):
        raise ValueError("Funções definidas sobre espaços de fase diferentes")
    espaco = f.espaco
    diferenca = espaco.diferenca
    colunas = np.arange(espaco.num_pontos)[None, :]
    nucleo = f.valores[diferenca] * espaco.matriz_multiplicador[diferenca, colunas]
    return FuncaoDual(espaco, espaco.peso * (nucleo @ g.valores))


def wigner(rep: Representacao, A: Operador) -> FuncaoFase:
    """``W(A) = F_σ(F_U(A))``; integra a ``tr(A)`` e vale 1 na identidade."""

    return fourier_simpletico_inversa(fourier_weyl(rep, A))


@dataclass
class RelatorioFourier:
    tentativas: int
    desvios: Dict[str, float] = field(default_factory=dict)
    posto_injetividade: int = 0
    dimensao: int = 0
    tol: float = 1e-9

    @property
    def aprovado(self) -> bool:
        return self.posto_injetividade == self.dimensao and all(
            d <= self.tol for d in self.desvios.values()
        )

    def registrar(self, nome: str, desvio: float) -> None:
        self.desvios[nome] = max(self.desvios.get(nome, 0.0), float(desvio))

    def como_dicionario(self) -> dict:
        return {
            "tentativas": self.tentativas,
            "desvios": dict(sorted(self.desvios.items())),
            "posto_injetividade": self.posto_injetividade,
            "dimensao": self.dimensao,
            "aprovado": self.aprovado,
        }


def _desvio(a, b) -> float:
    a = a.valores if hasattr(a, "valores") else a.matriz if hasattr(a, "matriz") else a
    b = b.valores if hasattr(b, "valores") else b.matriz if hasattr(b, "matriz") else b
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def verificar_propriedades_fourier(
    rep: Representacao,
    rng: np.random.Generator,
    tentativas: int = 50,
    tol: float = 1e-9,
) -> RelatorioFourier:
    """Inversão, Plancherel, teorema da convolução e as regras de deslocamento de ``F_U``."""

    from .amostras import funcao_aleatoria, operador_aleatorio

    espaco = rep.espaco
    matriz_m = espaco.matriz_multiplicador
    sigma = espaco.sigma
    indices = np.arange(espaco.num_pontos)
    relatorio = RelatorioFourier(tentativas, tol=tol, dimensao=rep.dim ** 2)
    relatorio.posto_injetividade = int(
        np.linalg.matrix_rank(rep.unitarios.conj().reshape(espaco.num_pontos, -1))
    )

    for _ in range(tentativas):
        f = funcao_aleatoria(rng, espaco)
        g = funcao_aleatoria(rng, espaco)
        A = operador_aleatorio(rng, rep.dim)
        B = operador_aleatorio(rng, rep.dim)
        Ff = fourier_simpletico(f)
        FA = fourier_weyl(rep, A)
        FB = fourier_weyl(rep, B)

        relatorio.registrar("inversao_simpletica", _desvio(fourier_simpletico_inversa(Ff), f))
        relatorio.registrar("plancherel_simpletico", abs(norma_lp(Ff, 2) - norma_lp(f, 2)))
        relatorio.registrar(
            "convolucao_simpletica", _desvio(fourier_simpletico(convolucao_ff(f, g)), Ff * fourier_simpletico(g))
        )
        relatorio.registrar("inversao_weyl", _desvio(fourier_weyl_inversa(rep, FA), A))
        relatorio.registrar("plancherel_weyl", abs(norma_schatten(A, 2) - norma_lp(FA, 2)))
        relatorio.registrar(
            "produto_torcido", _desvio(fourier_weyl(rep, A @ B), convolucao_torcida(FA, FB))
        )
        relatorio.registrar("adjunto", verificar_adjunto_fourier_weyl(rep, A))
        relatorio.registrar(
            "funcao_operador", _desvio(fourier_weyl(rep, convolucao_fa(rep, f, A)), Ff * FA)
        )
        fator = matriz_m[indices, espaco.negativo]
        relatorio.registrar(
            "operador_operador",
            _desvio(fourier_simpletico(convolucao_ab(rep, A, B)), fator * FA.valores * FB.valores),
        )

        eta = int(rng.integers(espaco.num_pontos))
        relatorio.registrar(
            "deslocamento", _desvio(fourier_weyl(rep, deslocar(rep, eta, A)), sigma[eta] * FA.valores)
        )
        relatorio.registrar("modulacao", verificar_deslocamento_fourier_weyl(rep, A))
    logger.debug("Fourier: %s", relatorio.desvios)
    return relatorio


@dataclass
class RelatorioModulacao:
    tentativas: int
    desvio_maximo: float
    aprovado: bool


def verificar_modulacao(
    rep: Representacao,
    rng: np.random.Generator,
    tentativas: int = 20,
    tol: float = 1e-10,
) -> RelatorioModulacao:
    """``F_U(U_{x/2} A U_{x/2})(ξ) = F_U(A)(ξ − x)`` para o multiplicador de Weyl."""

    from .amostras import operador_aleatorio

    espaco = rep.espaco
    if espaco.multiplicador.tipo != "weyl":
        raise ValueError(
            f"A regra de modulação exige o multiplicador de Weyl; recebido '{espaco.multiplicador.tipo}'"
        )
    operadores = [Operador.identidade(rep.dim)] + [
        operador_aleatorio(rng, rep.dim) for _ in range(tentativas)
    ]
    desvio = 0.0
    for A in operadores:
        FA = fourier_weyl(rep, A)
        for x in range(espaco.num_pontos):
            U = Operador(rep.unitarios[espaco.metade(x)])
            esquerda = fourier_weyl(rep, U @ A @ U)
            desvio = max(desvio, _desvio(esquerda, deslocar_funcao(FA, x)))
    return RelatorioModulacao(len(operadores), desvio, desvio <= tol)


@dataclass
class RelatorioHausdorffYoung:
    tentativas: int
    verificacoes: int
    violacoes: int
    desvio_plancherel: float
    aprovado: bool


def verificar_hausdorff_young(
    rep: Representacao,
    rng: np.random.Generator,
    tentativas: int = 100,
    folga: float = 1e-9,
) -> RelatorioHausdorffYoung:
    """``‖F_U A‖_{q} ≤ ‖A‖_{T^p}`` e ``‖F_U⁻¹ f‖_{T^q} ≤ ‖f‖_{p}`` para ``1 ≤ p ≤ 2``."""

    from .amostras import funcao_aleatoria, operador_aleatorio

    pares = [(1.0, math.inf), (4.0 / 3.0, 4.0), (2.0, 2.0)]
    verificacoes = violacoes = 0
    plancherel = 0.0
    for _ in range(tentativas):
        A = operador_aleatorio(rng, rep.dim)
        f = funcao_aleatoria(rng, rep.espaco)
        FA = fourier_weyl(rep, A)
        Ff = fourier_weyl_inversa(rep, f)
        for p, q in pares:
            for esquerda, direita in (
                (norma_lp(FA, q), norma_schatten(A, p)),
                (norma_schatten(Ff, q), norma_lp(f, p)),
            ):
                verificacoes += 1
                if esquerda > direita + folga * max(1.0, direita):
                    violacoes += 1
        escala = max(1.0, norma_schatten(A, 2))
        plancherel = max(plancherel, abs(norma_schatten(A, 2) - norma_lp(FA, 2)) / escala)
    aprovado = violacoes == 0 and plancherel <= folga
    return RelatorioHausdorffYoung(tentativas, verificacoes, violacoes, plancherel, aprovado)


def verificar_adjunto_fourier_weyl(rep: Representacao, A: Operador) -> float:
    """Maior desvio de ``F_U(A*)(ξ) = conj(m(−ξ, ξ) F_U(A)(−ξ))`` sobre todo ``ξ``."""

    return _desvio(fourier_weyl(rep, A.adjunto()), adjunto_torcido(fourier_weyl(rep, A)))


def verificar_deslocamento_fourier_weyl(rep: Representacao, A: Operador) -> float:
    """Maior desvio das duas fórmulas de modulação de ``F_U`` sobre todo ``η``.

    ``F_U(A)(ξ − η) = m(−η, ξ) F_U(U_{−η}* A)(ξ) = m(ξ, −η) F_U(A U_{−η}*)(ξ)``.
    """

    espaco = rep.espaco
    matriz_m = espaco.matriz_multiplicador
    FA = fourier_weyl(rep, A)
    desvio = 0.0
    for eta in range(espaco.num_pontos):
        menos_eta = int(espaco.negativo[eta])
        adjunto = Operador(rep.unitarios[menos_eta]).adjunto()
        transladada = deslocar_funcao(FA, eta).valores
        esquerda = matriz_m[menos_eta] * fourier_weyl(rep, adjunto @ A).valores
        direita = matriz_m[:, menos_eta] * fourier_weyl(rep, A @ adjunto).valores
        desvio = max(desvio, _desvio(transladada, esquerda), _desvio(transladada, direita))
    return desvio
