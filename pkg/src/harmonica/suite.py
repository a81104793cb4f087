"""Suíte de verificação agregada pelo comando ``verify``."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

import numpy as np

from .amostras import (
    criar_gerador,
    densidade_aleatoria,
    hermitiano_aleatorio,
    janela_simetrica_aleatoria,
    operador_aleatorio,
)
from .bochner_wiener import (
    reconstruir_bochner,
    relatorio_wiener,
    verificar_estado_geometrico,
    verificar_positividade_torcida,
)
from .convolucao import verificar_positividade, verificar_young
from .coorbita import criar_janela, independencia_p_wiener, verificar_coorbita
from .correspondencia import aplicar_regra, criar_regra, recuperar_densidades, verificar_berezin_lieb, verificar_regra
from .espaco_fase import (
    EspacoFase,
    Multiplicador,
    forma_simpletica,
    verificar_forma_simpletica,
    verificar_multiplicador,
)
from .fourier import fourier_weyl, verificar_hausdorff_young, verificar_modulacao, verificar_propriedades_fourier
from .grupo import TOLERANCIA_PADRAO
from .representacao import (
    Operador,
    Representacao,
    construir_representacao,
    desvio_ccr,
    desvio_paridade,
    desvio_unitariedade,
    posto_irredutibilidade,
    verificar_moyal,
)

logger = logging.getLogger(__name__)

# Tolerância dos itens com somas aleatórias de magnitude O(N²).
TOLERANCIA_AMOSTRAL = 1e-9

# Tentativas fixas das desigualdades de Hausdorff–Young e Berezin–Lieb.
TENTATIVAS_HAUSDORFF_YOUNG = 200
TENTATIVAS_BEREZIN_LIEB = 100


@dataclass(frozen=True)
class ConfiguracaoExecucao:
    """Parâmetros congelados de uma execução da CLI."""

    multiplicador: Multiplicador
    semente: int = 7
    tentativas: int = 20
    tol: float = TOLERANCIA_PADRAO

    @property
    def grupo(self):
        return self.multiplicador.grupo


@dataclass
class RelatorioSuite:
    configuracao: ConfiguracaoExecucao
    itens: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    @property
    def aprovado(self) -> bool:
        return all(item.get("aprovado", False) for item in self.itens.values() if not item.get("ignorado"))

    def como_dicionario(self) -> dict:
        config = self.configuracao
        return {
            "grupo": str(config.grupo),
            "multiplicador": config.multiplicador.tipo,
            "semente": config.semente,
            "gerador": "numpy.random.PCG64",
            "tentativas": config.tentativas,
            "tolerancia": config.tol,
            "itens": self.itens,
            "aprovado": self.aprovado,
        }


def _limpar(valor: Any) -> Any:
    """Converte escalares numpy para tipos nativos serializáveis."""

    if isinstance(valor, dict):
        return {str(k): _limpar(v) for k, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [_limpar(v) for v in valor]
    if isinstance(valor, (np.bool_, bool)):
        return bool(valor)
    if isinstance(valor, (np.integer,)):
        return int(valor)
    if isinstance(valor, (np.floating, float)):
        return float(valor)
    return valor


def _item_representacao(rep: Representacao, rng: np.random.Generator, config: ConfiguracaoExecucao) -> dict:
    moyal = verificar_moyal(rep, rng, tentativas=config.tentativas, tol=TOLERANCIA_AMOSTRAL)
    desvios = {
        "unitariedade": desvio_unitariedade(rep),
        "ccr": desvio_ccr(rep),
        "paridade": desvio_paridade(rep),
    }
    posto = posto_irredutibilidade(rep)
    return {
        **desvios,
        "moyal": moyal.desvio_maximo,
        "posto_irredutibilidade": posto,
        "aprovado": max(desvios.values()) <= config.tol and moyal.aprovado and posto == rep.dim ** 2,
    }


def _item_fourier(rep: Representacao, rng: np.random.Generator, config: ConfiguracaoExecucao) -> dict:
    propriedades = verificar_propriedades_fourier(rep, rng, tentativas=config.tentativas, tol=TOLERANCIA_AMOSTRAL)
    hausdorff = verificar_hausdorff_young(rep, rng, tentativas=TENTATIVAS_HAUSDORFF_YOUNG)
    item = propriedades.como_dicionario()
    item["hausdorff_young_tentativas"] = hausdorff.tentativas
    item["hausdorff_young_verificacoes"] = hausdorff.verificacoes
    item["hausdorff_young_violacoes"] = hausdorff.violacoes
    item["aprovado"] = propriedades.aprovado and hausdorff.aprovado
    if rep.espaco.multiplicador.tipo == "weyl":
        modulacao = verificar_modulacao(rep, rng, tentativas=max(1, config.tentativas // 4))
        item["modulacao"] = modulacao.desvio_maximo
        item["aprovado"] = item["aprovado"] and modulacao.aprovado
    return item


def _item_bochner(rep: Representacao, rng: np.random.Generator, config: ConfiguracaoExecucao) -> dict:
    certificados = 0
    casos = set()
    for _ in range(config.tentativas):
        rho = densidade_aleatoria(rng, rep.dim)
        resultado = reconstruir_bochner(rep, fourier_weyl(rep, rho))
        certificados += int(resultado.certificado and resultado.menor_autovalor >= -TOLERANCIA_AMOSTRAL)
        casos.add(resultado.caso)
    # contraexemplo: operador hermitiano indefinido
    indefinido = Operador(np.diag([1.0] + [-1.0] * (rep.dim - 1)))
    rejeitado = not verificar_positividade_torcida(fourier_weyl(rep, indefinido)).eh_pd
    return {
        "certificados": certificados,
        "caso": sorted(casos),
        "indefinido_rejeitado": rejeitado,
        "aprovado": certificados == config.tentativas and rejeitado,
    }


def _item_wiener(rep: Representacao, rng: np.random.Generator, config: ConfiguracaoExecucao) -> dict:
    consistentes = 0
    regulares = 0
    familias = max(1, config.tentativas)
    for _ in range(familias):
        relatorio = relatorio_wiener(rep, [operador_aleatorio(rng, rep.dim)])
        consistentes += int(relatorio.consistente)
        regulares += int(relatorio.regular)
    identidade = relatorio_wiener(rep, [Operador.identidade(rep.dim)])
    geometrico = verificar_estado_geometrico()
    return {
        "familias": familias,
        "consistentes": consistentes,
        "regulares": regulares,
        "identidade_regular": identidade.regular,
        "identidade_posto_span": identidade.posto_span,
        "estado_geometrico": geometrico.como_dicionario(),
        "aprovado": consistentes == familias
        and identidade.consistente
        and not identidade.regular
        and identidade.posto_span == 1
        and geometrico.aprovado,
    }


def _item_correspondencia(rep: Representacao, rng: np.random.Generator, config: ConfiguracaoExecucao) -> dict:
    n = rep.dim
    regras = {
        "mista": criar_regra(Operador.identidade(n) / n, Operador.identidade(n) / n),
        "aleatoria": criar_regra(densidade_aleatoria(rng, n), densidade_aleatoria(rng, n)),
    }
    item: dict = {}
    for nome, regra in regras.items():
        item[nome] = verificar_regra(rep, regra, rng, tentativas=config.tentativas, tol=TOLERANCIA_AMOSTRAL).como_dicionario()

    violacoes = 0
    for _ in range(TENTATIVAS_BEREZIN_LIEB):
        A = hermitiano_aleatorio(rng, n)
        for regra in regras.values():
            violacoes += int(not verificar_berezin_lieb(rep, regra, A, "t2", tol=TOLERANCIA_AMOSTRAL).aprovado)
    item["berezin_lieb"] = {
        "funcao_convexa": "t2",
        "tentativas": TENTATIVAS_BEREZIN_LIEB,
        "violacoes": violacoes,
        "aprovado": violacoes == 0,
    }

    regra = regras["aleatoria"]
    B1, B2 = recuperar_densidades(rep, lambda u: aplicar_regra(rep, regra, u))
    desvio = max(
        float(np.max(np.abs(B1.matriz - regra.b1.matriz))),
        float(np.max(np.abs(B2.matriz - regra.b2.matriz))),
    )
    item["recuperacao"] = {"desvio": desvio, "aprovado": desvio <= TOLERANCIA_AMOSTRAL}
    item["aprovado"] = all(sub["aprovado"] for sub in item.values())
    return item


def _item_coorbita(rep: Representacao, rng: np.random.Generator, config: ConfiguracaoExecucao) -> dict:
    relatorio = verificar_coorbita(rep, rng, tentativas=config.tentativas, tol=TOLERANCIA_AMOSTRAL)
    janela = criar_janela(rep, janela_simetrica_aleatoria(rng, rep.paridade))
    outra = verificar_coorbita(rep, rng, janela=janela, tentativas=config.tentativas, tol=TOLERANCIA_AMOSTRAL)
    independencia = independencia_p_wiener(
        rep, [operador_aleatorio(rng, rep.dim)], [1.5, 2.0, 3.0], janela=janela
    )
    item = relatorio.como_dicionario()
    item["janela_aleatoria"] = outra.como_dicionario()
    item["independencia_p"] = independencia.como_dicionario()
    item["aprovado"] = relatorio.aprovado and outra.aprovado and independencia.aprovado
    return item


_ITENS: Dict[str, Callable[[Representacao, np.random.Generator, ConfiguracaoExecucao], dict]] = {
    "representacao": _item_representacao,
    "young": lambda rep, rng, c: verificar_young(rep, rng, tentativas=c.tentativas).como_dicionario(),
    "positividade": lambda rep, rng, c: verificar_positividade(
        rep, rng, tentativas=c.tentativas, tol=TOLERANCIA_AMOSTRAL
    ).como_dicionario(),
    "fourier": _item_fourier,
    "bochner": _item_bochner,
    "wiener": _item_wiener,
    "correspondencia": _item_correspondencia,
    "coorbita": _item_coorbita,
}


def executar_suite(config: ConfiguracaoExecucao) -> RelatorioSuite:
    """Roda todas as verificações com um único gerador semeado por ``config.semente``."""

    relatorio = RelatorioSuite(config)
    m = config.multiplicador
    cociclo = verificar_multiplicador(m, tol=config.tol)
    forma = verificar_forma_simpletica(forma_simpletica(m), m.grupo_fase, tol=TOLERANCIA_AMOSTRAL)
    relatorio.itens["multiplicador"] = _limpar(
        {
            **cociclo.como_dicionario(),
            "forma_simpletica": {
                "desvio_bicaractere": forma.desvio_bicaractere,
                "desvio_antissimetria": forma.desvio_antissimetria,
                "desvio_alternancia": forma.desvio_alternancia,
                "heisenberg": forma.heisenberg,
            },
            "aprovado": cociclo.aprovado and forma.aprovado,
        }
    )
    logger.info("multiplicador: %s", "aprovado" if relatorio.itens["multiplicador"]["aprovado"] else "reprovado")

    rep: Optional[Representacao] = None
    motivo = None
    if not relatorio.itens["multiplicador"]["aprovado"]:
        motivo = "multiplicador reprovado"
    else:
        try:
            rep = construir_representacao(EspacoFase(m.grupo, m), tol=config.tol)
        except ValueError as exc:
            motivo = str(exc)

    rng = criar_gerador(config.semente)
    for nome, verificacao in _ITENS.items():
        if rep is None:
            relatorio.itens[nome] = {"ignorado": True, "motivo": motivo}
            continue
        relatorio.itens[nome] = _limpar(verificacao(rep, rng, config))
        logger.info("%s: %s", nome, "aprovado" if relatorio.itens[nome]["aprovado"] else "reprovado")
    return relatorio
