"""Positividade torcida (Bochner) e os critérios de Wiener para famílias de operadores."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

import numpy as np
from scipy import linalg

from .convolucao import FuncaoFase, convolucao_ab
from .espaco_fase import MultiplicadorModificado, PontoFase, eh_bicaractere
from .fourier import fourier_simpletico, fourier_weyl, fourier_weyl_inversa
from .representacao import Operador, Representacao, deslocamentos

logger = logging.getLogger(__name__)

# Maior |Ξ| aceito pelos critérios de Wiener.
LIMITE_PONTOS_WIENER = 1024
TOLERANCIA_POSTO = 1e-8


@dataclass
class RelatorioPositividadeTorcida:
    gram: np.ndarray
    menor_autovalor: float
    desvio_hermitiano: float
    eh_pd: bool


def matriz_gram_torcida(f: FuncaoFase) -> np.ndarray:
    """``G[j, k] = m(−x_k, x_k) conj(m(x_j, −x_k)) f(x_j − x_k)``."""

    espaco = f.espaco
    matriz_m = espaco.matriz_multiplicador
    indices = np.arange(espaco.num_pontos)
    fator_coluna = matriz_m[espaco.negativo, indices]
    return fator_coluna[None, :] * matriz_m[:, espaco.negativo].conj() * f.valores[espaco.diferenca]


def verificar_positividade_torcida(f: FuncaoFase, tol: float = 1e-9) -> RelatorioPositividadeTorcida:
    """``f`` é ``m``-positiva definida quando a matriz de Gram torcida é semidefinida."""

    gram = matriz_gram_torcida(f)
    hermitiana = (gram + gram.conj().T) / 2
    menor = float(np.linalg.eigvalsh(hermitiana)[0])
    desvio = float(np.max(np.abs(gram - gram.conj().T)))
    escala = max(1.0, float(np.abs(gram).max()))
    return RelatorioPositividadeTorcida(gram, menor, desvio, menor >= -tol and desvio <= tol * escala)


@dataclass
class ResultadoBochner:
    operador: Operador
    menor_autovalor: float
    desvio_reconstrucao: float
    certificado: bool
    caso: str


def _caso_bochner(rep: Representacao) -> str:
    m = rep.espaco.multiplicador
    if eh_bicaractere(m):
        return "bicaractere"
    if isinstance(m, MultiplicadorModificado) and eh_bicaractere(m.base):
        return "modificado"
    return "experimental"


def reconstruir_bochner(rep: Representacao, f: FuncaoFase, tol: float = 1e-9) -> ResultadoBochner:
    """Reconstrói ``A = F_U⁻¹(f)`` e certifica ``A ≥ 0`` contra a positividade torcida de ``f``."""

    operador = fourier_weyl_inversa(rep, f)
    menor = operador.menor_autovalor()
    desvio = float(np.max(np.abs(fourier_weyl(rep, operador).valores - f.valores)))
    positiva = verificar_positividade_torcida(f, tol)
    certificado = positiva.eh_pd == (menor >= -tol and operador.eh_hermitiano(tol))
    caso = _caso_bochner(rep)
    if caso == "experimental":
        logger.warning("Multiplicador '%s' fora das hipóteses do teorema de Bochner", rep.espaco.multiplicador.tipo)
    return ResultadoBochner(operador, menor, desvio, certificado, caso)


def posto_numerico(matriz: np.ndarray, tol_relativa: float = TOLERANCIA_POSTO) -> int:
    valores = linalg.svdvals(matriz)
    if valores.size == 0 or valores[0] == 0:
        return 0
    return int(np.sum(valores > tol_relativa * valores[0]))


def _validar_familia(rep: Representacao, familia: Sequence, limite: int) -> None:
    if len(familia) == 0:
        raise ValueError("A família não pode ser vazia")
    if rep.espaco.num_pontos > limite:
        raise ValueError(
            f"|Ξ| = {rep.espaco.num_pontos} excede o limite de {limite} pontos para os critérios de Wiener"
        )


def _nucleos_convolucao(rep: Representacao, A: Operador) -> np.ndarray:
    """Linhas ``vec(K_x^T)`` com ``(A ∗ B)(x) = tr(K_x B)``, ``K_x = R α_{−x}(A) R``."""

    R = rep.paridade
    adjuntos = rep.unitarios.conj().transpose(0, 2, 1)
    nucleos = R @ adjuntos @ A.matriz @ rep.unitarios @ R
    return nucleos.transpose(0, 2, 1).reshape(rep.espaco.num_pontos, -1)


def matriz_aniquilador_operadores(rep: Representacao, familia: Sequence[Operador]) -> np.ndarray:
    """Mapa ``B ↦ ((A ∗ B)(x))_{A, x}`` como matriz ``(|S|·|Ξ|) × N²``."""

    return np.vstack([_nucleos_convolucao(rep, A) for A in familia])


def matriz_aniquilador_funcoes(rep: Representacao, familia: Sequence[Operador]) -> np.ndarray:
    """Mapa ``g ↦ (A ∗ g)_A`` como matriz ``(|S|·N²) × |Ξ|``."""

    peso = rep.espaco.peso
    blocos = [peso * deslocamentos(rep, A).reshape(rep.espaco.num_pontos, -1).T for A in familia]
    return np.vstack(blocos)


@dataclass
class RelatorioRegularidade:
    itens: Dict[str, bool]
    conjunto_zeros: List[PontoFase]
    posto_span: int
    dimensao_aniquilador_operadores: int
    dimensao_aniquilador_funcoes: int
    detalhes: Dict[str, int] = field(default_factory=dict)

    @property
    def regular(self) -> bool:
        return self.itens["v"]

    @property
    def consistente(self) -> bool:
        return len(set(self.itens.values())) == 1

    def como_dicionario(self) -> dict:
        return {
            "itens": self.itens,
            "regular": self.regular,
            "consistente": self.consistente,
            "conjunto_zeros": [[list(p.pos), list(p.mom)] for p in self.conjunto_zeros],
            "posto_span": self.posto_span,
            "dimensao_aniquilador_operadores": self.dimensao_aniquilador_operadores,
            "dimensao_aniquilador_funcoes": self.dimensao_aniquilador_funcoes,
            "detalhes": self.detalhes,
        }


def relatorio_wiener(
    rep: Representacao,
    familia: Sequence[Operador],
    tol_zero: float = 1e-8,
    limite: int = LIMITE_PONTOS_WIENER,
) -> RelatorioRegularidade:
    """Avalia os sete critérios equivalentes de regularidade para ``S ⊂ T¹``."""

    _validar_familia(rep, familia, limite)
    espaco = rep.espaco
    pontos = espaco.num_pontos
    dim2 = rep.dim ** 2

    # (v) zeros comuns de F_U
    zeros = np.ones(pontos, dtype=bool)
    for A in familia:
        FA = np.abs(fourier_weyl(rep, A).valores)
        zeros &= FA <= tol_zero * max(linalg.svdvals(A.matriz).sum(), np.finfo(float).tiny)
    conjunto_zeros = [espaco.ponto(int(i)) for i in np.flatnonzero(zeros)]

    # (i) e (ii): span dos deslocamentos e imagem de (f_A) ↦ Σ f_A ∗ A
    deslocados = np.vstack([deslocamentos(rep, A).reshape(pontos, -1) for A in familia])
    posto_span = posto_numerico(deslocados)
    posto_l1 = posto_numerico(espaco.peso * deslocados.T)

    # (iii) e (vi): B ↦ A ∗ B
    aniquilador_ops = matriz_aniquilador_operadores(rep, familia)
    posto_t1 = posto_numerico(np.hstack([_nucleos_convolucao(rep, A) for A in familia]))
    nulo_ops = linalg.null_space(aniquilador_ops, rcond=TOLERANCIA_POSTO).shape[1]

    # (vii): g ↦ A ∗ g
    nulo_funcoes = linalg.null_space(
        matriz_aniquilador_funcoes(rep, familia), rcond=TOLERANCIA_POSTO
    ).shape[1]

    # (iv): translados de A ∗ A
    auto = [convolucao_ab(rep, A, A).valores for A in familia]
    translados = np.vstack([valores[espaco.diferenca].T for valores in auto])
    posto_auto = posto_numerico(translados)

    itens = {
        "i": posto_span == dim2,
        "ii": posto_l1 == dim2,
        "iii": posto_t1 == pontos,
        "iv": posto_auto == pontos,
        "v": not conjunto_zeros,
        "vi": nulo_ops == 0,
        "vii": nulo_funcoes == 0,
    }
    relatorio = RelatorioRegularidade(
        itens,
        conjunto_zeros,
        posto_span,
        nulo_ops,
        nulo_funcoes,
        {"posto_l1": posto_l1, "posto_t1": posto_t1, "posto_autoconvolucao": posto_auto},
    )
    if not relatorio.consistente:
        logger.warning("Critérios de Wiener divergentes: %s", itens)
    return relatorio


def resolver_aniquilador(
    rep: Representacao, familia: Sequence[Operador], lado: str = "operador"
) -> list:
    """Base do aniquilador: operadores ``B`` com ``A ∗ B = 0`` ou funções ``g`` com ``A ∗ g = 0``."""

    _validar_familia(rep, familia, LIMITE_PONTOS_WIENER)
    if lado == "operador":
        base = linalg.null_space(matriz_aniquilador_operadores(rep, familia), rcond=TOLERANCIA_POSTO)
        return [Operador(v.reshape(rep.dim, rep.dim)) for v in base.T]
    if lado == "funcao":
        base = linalg.null_space(matriz_aniquilador_funcoes(rep, familia), rcond=TOLERANCIA_POSTO)
        return [FuncaoFase(rep.espaco, v) for v in base.T]
    raise ValueError(f"Lado desconhecido: '{lado}' (use 'operador' ou 'funcao')")


class RelatorioRegularidadeFuncoes(RelatorioRegularidade):
    """Mesma estrutura, com a regularidade decidida pelos zeros de ``F_σ``."""

    @property
    def regular(self) -> bool:
        return self.itens["b"]


def _mapa_funcao_operador(rep: Representacao, f: FuncaoFase) -> np.ndarray:
    """``B ↦ f ∗ B`` como matriz ``N² × N²`` sobre a vetorização por linhas."""

    U = rep.unitarios
    mapa = np.einsum("x,xik,xjl->ijkl", f.valores, U, U.conj())
    return rep.espaco.peso * mapa.reshape(rep.dim ** 2, rep.dim ** 2)


def relatorio_wiener_funcoes(
    rep: Representacao,
    familia: Sequence[FuncaoFase],
    tol_zero: float = 1e-8,
    limite: int = LIMITE_PONTOS_WIENER,
) -> RelatorioRegularidadeFuncoes:
    """Critérios de Wiener para uma família de funções ``S ⊂ L¹(Ξ)``."""

    _validar_familia(rep, familia, limite)
    espaco = rep.espaco
    pontos = espaco.num_pontos
    dim2 = rep.dim ** 2

    zeros = np.ones(pontos, dtype=bool)
    for f in familia:
        Ff = np.abs(fourier_simpletico(f).valores)
        escala = espaco.peso * np.abs(f.valores).sum()
        zeros &= Ff <= tol_zero * max(escala, np.finfo(float).tiny)
    conjunto_zeros = [espaco.ponto(int(i)) for i in np.flatnonzero(zeros)]

    translados = np.vstack([f.valores[espaco.diferenca].T for f in familia])
    posto_span = posto_numerico(translados)
    nulo_funcoes = linalg.null_space(translados, rcond=TOLERANCIA_POSTO).shape[1]

    mapas = [_mapa_funcao_operador(rep, f) for f in familia]
    posto_t1 = posto_numerico(np.hstack(mapas))
    nulo_ops = linalg.null_space(np.vstack(mapas), rcond=TOLERANCIA_POSTO).shape[1]

    itens = {
        "a": posto_span == pontos,
        "b": not conjunto_zeros,
        "c": posto_t1 == dim2,
        "d": nulo_funcoes == 0,
        "e": nulo_ops == 0,
    }
    relatorio = RelatorioRegularidadeFuncoes(
        itens, conjunto_zeros, posto_span, nulo_ops, nulo_funcoes, {"posto_t1": posto_t1}
    )
    if not relatorio.consistente:
        logger.warning("Critérios de Wiener (funções) divergentes: %s", itens)
    return relatorio


def estado_geometrico(d: int, razao: float = 0.5) -> np.ndarray:
    """``ψ(n) = cⁿ`` em ``Z_d``, sem normalização."""

    if d < 2:
        raise ValueError(f"Dimensão {d} inválida: exige-se d ≥ 2")
    if not 0 < abs(razao) < 1:
        raise ValueError(f"Razão {razao} inválida: exige-se 0 < |c| < 1")
    return razao ** np.arange(d, dtype=float)


def _representacao_ciclica(d: int) -> Representacao:
    from .espaco_fase import criar_espaco_fase
    from .grupo import criar_grupo
    from .representacao import construir_representacao

    return construir_representacao(criar_espaco_fase(criar_grupo([d])))


def analisar_estado_geometrico(d: int, razao: float = 0.5) -> RelatorioRegularidade:
    """Relatório de Wiener para ``{ψ ⊗ ψ}`` em ``Z_d``; regular só para ``d`` ímpar."""

    rep = _representacao_ciclica(d)
    return relatorio_wiener(rep, [Operador.posto_um(estado_geometrico(d, razao))])


def convergencia_estado_geometrico(
    dimensoes: Sequence[int] = (4, 6, 8), razao: float = 0.5
) -> Dict[int, float]:
    """Erro máximo em ``x = 0`` entre ``F_U(ψ ⊗ ψ)`` sobre ``Z_d`` e o limite ``1/(1 − c² e^{−iθ})``."""

    erros: Dict[int, float] = {}
    for d in dimensoes:
        rep = _representacao_ciclica(d)
        psi = estado_geometrico(d, razao)
        FA = fourier_weyl(rep, Operador.posto_um(psi)).valores[:d]
        theta = 2 * np.pi * np.arange(d) / d
        limite = 1.0 / (1.0 - razao ** 2 * np.exp(-1j * theta))
        erros[d] = float(np.max(np.abs(FA - limite)))
    return erros


@dataclass
class RelatorioEstadoGeometrico:
    regulares: Dict[int, bool]
    zeros_esperados: Dict[int, bool]
    erros: Dict[int, float]
    cotas: Dict[int, float]
    consistente: bool

    @property
    def decrescente(self) -> bool:
        valores = [self.erros[d] for d in sorted(self.erros)]
        return all(a > b for a, b in zip(valores, valores[1:]))

    @property
    def aprovado(self) -> bool:
        return (
            self.consistente
            and all(self.regulares[d] == (d % 2 == 1) for d in self.regulares)
            and all(self.zeros_esperados.values())
            and self.decrescente
            and all(self.erros[d] <= self.cotas[d] * (1 + 1e-9) for d in self.erros)
        )

    def como_dicionario(self) -> dict:
        return {
            "regulares": self.regulares,
            "zeros_esperados": self.zeros_esperados,
            "erros": self.erros,
            "cotas": self.cotas,
            "consistente": self.consistente,
            "decrescente": self.decrescente,
            "aprovado": self.aprovado,
        }


def verificar_estado_geometrico(
    dimensoes: Sequence[int] = (5, 7, 8),
    dimensoes_convergencia: Sequence[int] = (4, 6, 8),
    razao: float = 0.5,
) -> RelatorioEstadoGeometrico:
    """Regular em ``d`` ímpar, zeros exatamente em ``(d/2, ímpar)`` em ``d`` par, e erro ``≤ c^{2d}/(1 − c²)``."""

    regulares: Dict[int, bool] = {}
    zeros_esperados: Dict[int, bool] = {}
    consistente = True
    for d in dimensoes:
        relatorio = analisar_estado_geometrico(d, razao)
        regulares[d] = relatorio.regular
        consistente = consistente and relatorio.consistente
        if d % 2 == 0:
            obtidos = {(p.pos.coords[0], p.mom.coords[0]) for p in relatorio.conjunto_zeros}
            zeros_esperados[d] = obtidos == {(d // 2, k) for k in range(1, d, 2)}
    erros = convergencia_estado_geometrico(dimensoes_convergencia, razao)
    cotas = {d: abs(razao) ** (2 * d) / (1 - abs(razao) ** 2) for d in erros}
    relatorio = RelatorioEstadoGeometrico(regulares, zeros_esperados, erros, cotas, consistente)
    if not relatorio.aprovado:
        logger.warning("Estado geométrico fora do esperado: %s", relatorio.como_dicionario())
    return relatorio
