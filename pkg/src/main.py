"""CLI para verificar e explorar análise harmônica quântica em grupos finitos."""
from __future__ import annotations

import argparse
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional

import numpy as np

if __package__ in (None, ""):
    # Permite executar ``python src/main.py`` ajustando o caminho para ``src/``.
    sys.path.insert(0, str(Path(__file__).resolve().parent))
    from harmonica import io as hio
    from harmonica.amostras import criar_gerador, fase_par_aleatoria
    from harmonica.bochner_wiener import reconstruir_bochner, relatorio_wiener, verificar_positividade_torcida
    from harmonica.convolucao import ElementoMisto, FuncaoFase, convolucao_ab, convolucao_fa, convolucao_ff
    from harmonica.coorbita import criar_janela, janela_padrao, norma_coorbita
    from harmonica.correspondencia import aplicar_regra, verificar_regra
    from harmonica.espaco_fase import EspacoFase, criar_espaco_fase, multiplicador_canonico, multiplicador_modificado
    from harmonica.fourier import fourier_weyl, wigner
    from harmonica.grupo import TOLERANCIA_PADRAO
    from harmonica.representacao import Operador, construir_representacao
    from harmonica.suite import ConfiguracaoExecucao, executar_suite
else:
    from .harmonica import io as hio
    from .harmonica.amostras import criar_gerador, fase_par_aleatoria
    from .harmonica.bochner_wiener import reconstruir_bochner, relatorio_wiener, verificar_positividade_torcida
    from .harmonica.convolucao import ElementoMisto, FuncaoFase, convolucao_ab, convolucao_fa, convolucao_ff
    from .harmonica.coorbita import criar_janela, janela_padrao, norma_coorbita
    from .harmonica.correspondencia import aplicar_regra, verificar_regra
    from .harmonica.espaco_fase import EspacoFase, criar_espaco_fase, multiplicador_canonico, multiplicador_modificado
    from .harmonica.fourier import fourier_weyl, wigner
    from .harmonica.grupo import TOLERANCIA_PADRAO
    from .harmonica.representacao import Operador, construir_representacao
    from .harmonica.suite import ConfiguracaoExecucao, executar_suite

logger = logging.getLogger(__name__)

SUCESSO, FALHA = 0, 1


def _parser_comum() -> argparse.ArgumentParser:
    comum = argparse.ArgumentParser(add_help=False)
    comum.add_argument("--group", help="Grupo no formato Z2xZ3")
    comum.add_argument(
        "--multiplier",
        choices=("canonical", "weyl", "modified"),
        default="canonical",
        help="Multiplicador de Heisenberg ('modified' usa uma fase par sorteada com --seed)",
    )
    comum.add_argument("--multiplier-json", type=Path, help="Multiplicador descrito em JSON (inclui 'table')")
    comum.add_argument("--seed", type=int, default=7, help="Semente do gerador aleatório")
    comum.add_argument("--trials", type=int, default=20, help="Número de tentativas aleatórias por verificação")
    comum.add_argument("--tol", type=float, default=TOLERANCIA_PADRAO, help="Tolerância das identidades exatas")
    comum.add_argument("--out", type=Path, help="Arquivo de saída (padrão: saída padrão)")
    comum.add_argument("--verbose", action="store_true", help="Exibe o progresso em stderr")
    return comum


def _criar_parser() -> argparse.ArgumentParser:
    comum = _parser_comum()
    parser = argparse.ArgumentParser(description="Análise harmônica quântica em espaços de fase finitos")
    comandos = parser.add_subparsers(dest="comando", required=True)

    comandos.add_parser("verify", parents=[comum], help="Roda a suíte completa de verificações")

    p_wigner = comandos.add_parser("wigner", parents=[comum], help="Função de Wigner de um operador em CSV")
    p_wigner.add_argument("--op", type=Path, required=True, help="Operador em JSON")

    p_fourier = comandos.add_parser("fourier", help="Transformadas de Fourier")
    sub_fourier = p_fourier.add_subparsers(dest="variante", required=True)
    p_weyl = sub_fourier.add_parser("weyl", parents=[comum], help="Transformada de Fourier–Weyl")
    p_weyl.add_argument("--op", type=Path, required=True, help="Operador em JSON")

    p_conv = comandos.add_parser("conv", help="Convoluções")
    sub_conv = p_conv.add_subparsers(dest="variante", required=True)
    p_ff = sub_conv.add_parser("ff", parents=[comum], help="Função ∗ função")
    p_ff.add_argument("--left", type=Path, required=True)
    p_ff.add_argument("--right", type=Path, required=True)
    p_fa = sub_conv.add_parser("fa", parents=[comum], help="Função ∗ operador")
    p_fa.add_argument("--fn", type=Path, required=True)
    p_fa.add_argument("--op", type=Path, required=True)
    p_ab = sub_conv.add_parser("ab", parents=[comum], help="Operador ∗ operador")
    p_ab.add_argument("--left", type=Path, required=True)
    p_ab.add_argument("--right", type=Path, required=True)

    p_canal = comandos.add_parser("channel", help="Regras de correspondência")
    sub_canal = p_canal.add_subparsers(dest="variante", required=True)
    p_apply = sub_canal.add_parser("apply", parents=[comum], help="Aplica Γ a (f, A)")
    p_apply.add_argument("--rule", type=Path, required=True)
    p_apply.add_argument("--fn", type=Path, help="Função em JSON (padrão: zero)")
    p_apply.add_argument("--op", type=Path, help="Operador em JSON (padrão: zero)")
    p_check = sub_canal.add_parser("verify", parents=[comum], help="Verifica as propriedades de Γ")
    p_check.add_argument("--rule", type=Path, required=True)

    p_wiener = comandos.add_parser("wiener", parents=[comum], help="Critérios de Wiener para uma família")
    p_wiener.add_argument("--family", type=Path, required=True)

    p_bochner = comandos.add_parser("bochner", parents=[comum], help="Positividade torcida e reconstrução")
    p_bochner.add_argument("--fn", type=Path, required=True)

    p_coorbita = comandos.add_parser("coorbit", help="Espaços de co-órbita")
    sub_coorbita = p_coorbita.add_subparsers(dest="variante", required=True)
    p_wnorm = sub_coorbita.add_parser("wnorm", parents=[comum], help="Norma de co-órbita de um vetor")
    p_wnorm.add_argument("--vec", type=Path, required=True)
    p_wnorm.add_argument("--p", type=float, required=True)
    p_wnorm.add_argument("--window", type=Path, help="Janela em JSON (padrão: e_0)")

    p_rep = comandos.add_parser("rep", help="Representações")
    sub_rep = p_rep.add_subparsers(dest="variante", required=True)
    sub_rep.add_parser("build", parents=[comum], help="Exporta os unitários U_z e a paridade R")
    return parser


def _configuracao(args: argparse.Namespace) -> ConfiguracaoExecucao:
    if args.trials <= 0:
        raise ValueError("--trials deve ser maior que zero")
    if not args.tol > 0:
        raise ValueError("--tol deve ser positivo")
    if args.multiplier_json is not None:
        multiplicador = hio.multiplicador_de_json(hio.carregar_de_arquivo(args.multiplier_json))
        if args.group is not None and hio.interpretar_grupo(args.group) != multiplicador.grupo:
            raise ValueError(f"--group {args.group} difere do grupo do multiplicador ({multiplicador.grupo})")
    else:
        if args.group is None:
            raise ValueError("Informe --group ou --multiplier-json")
        grupo = hio.interpretar_grupo(args.group)
        if args.multiplier == "modified":
            base = multiplicador_canonico(grupo)
            fase = fase_par_aleatoria(criar_gerador(args.seed), base.grupo_fase)
            multiplicador = multiplicador_modificado(base, fase)
        else:
            multiplicador = criar_espaco_fase(grupo, args.multiplier).multiplicador
    return ConfiguracaoExecucao(multiplicador, semente=args.seed, tentativas=args.trials, tol=args.tol)


def _representacao(config: ConfiguracaoExecucao):
    return construir_representacao(EspacoFase(config.grupo, config.multiplicador), tol=config.tol)


class ErroEntrada(Exception):
    """Argumento, arquivo ou formato inválido; encerra com código 2."""


@contextmanager
def _entrada():
    try:
        yield
    except (ValueError, FileNotFoundError) as exc:
        raise ErroEntrada(str(exc)) from exc


def _ler_entradas(args: argparse.Namespace, config: ConfiguracaoExecucao) -> dict:
    """Carrega e valida todos os arquivos do subcomando antes de qualquer cálculo."""

    with _entrada():
        rep = _representacao(config)
        n = rep.dim
        carregar = hio.carregar_de_arquivo
        entradas: dict = {"rep": rep}
        if args.comando in ("wigner", "fourier"):
            entradas["A"] = hio.operador_de_json(carregar(args.op), n)
        elif args.comando == "conv":
            if args.variante == "ff":
                entradas["f"] = hio.funcao_de_json(carregar(args.left), rep.espaco)
                entradas["g"] = hio.funcao_de_json(carregar(args.right), rep.espaco)
            elif args.variante == "fa":
                entradas["f"] = hio.funcao_de_json(carregar(args.fn), rep.espaco)
                entradas["A"] = hio.operador_de_json(carregar(args.op), n)
            else:
                entradas["A"] = hio.operador_de_json(carregar(args.left), n)
                entradas["B"] = hio.operador_de_json(carregar(args.right), n)
        elif args.comando == "channel":
            entradas["regra"] = hio.regra_de_json(carregar(args.rule), n)
            if args.variante == "apply":
                entradas["f"] = (
                    hio.funcao_de_json(carregar(args.fn), rep.espaco) if args.fn else FuncaoFase.constante(rep.espaco, 0)
                )
                entradas["A"] = hio.operador_de_json(carregar(args.op), n) if args.op else Operador.zero(n)
        elif args.comando == "wiener":
            entradas["familia"] = hio.familia_de_json(carregar(args.family), n)
        elif args.comando == "bochner":
            entradas["f"] = hio.funcao_de_json(carregar(args.fn), rep.espaco)
        elif args.comando == "coorbit":
            if not args.p >= 1:
                raise ValueError(f"--p deve ser ≥ 1; recebido {args.p}")
            entradas["vetor"] = hio.vetor_de_json(carregar(args.vec), n)
            entradas["janela"] = (
                criar_janela(rep, hio.vetor_de_json(carregar(args.window), n)) if args.window else janela_padrao(rep)
            )
    return entradas


def _executar(args: argparse.Namespace, config: ConfiguracaoExecucao) -> int:
    if args.comando == "verify":
        relatorio = executar_suite(config)
        hio.escrever_saida(hio.serializar(relatorio.como_dicionario()), args.out)
        return SUCESSO if relatorio.aprovado else FALHA

    entradas = _ler_entradas(args, config)
    rep = entradas["rep"]

    if args.comando == "wigner":
        A = entradas["A"]
        avisos = []
        menor = A.menor_autovalor()
        if not A.eh_hermitiano() or menor < -config.tol:
            avisos.append(f"operador não é positivo semidefinido (menor autovalor {menor:.6g})")
            logger.warning(avisos[-1])
        hio.escrever_saida(hio.wigner_para_csv(wigner(rep, A), avisos), args.out)
        return SUCESSO

    if args.comando == "fourier":
        hio.escrever_saida(hio.serializar(hio.funcao_para_json(fourier_weyl(rep, entradas["A"]))), args.out)
        return SUCESSO

    if args.comando == "conv":
        if args.variante == "ff":
            saida = hio.funcao_para_json(convolucao_ff(entradas["f"], entradas["g"]))
        elif args.variante == "fa":
            saida = hio.operador_para_json(convolucao_fa(rep, entradas["f"], entradas["A"]))
        else:
            saida = hio.funcao_para_json(convolucao_ab(rep, entradas["A"], entradas["B"]))
        hio.escrever_saida(hio.serializar(saida), args.out)
        return SUCESSO

    if args.comando == "channel":
        regra = entradas["regra"]
        if args.variante == "apply":
            saida = aplicar_regra(rep, regra, ElementoMisto(entradas["f"], entradas["A"]))
            documento = {"function": hio.funcao_para_json(saida.funcao), "operator": hio.operador_para_json(saida.operador)}
            hio.escrever_saida(hio.serializar(documento), args.out)
            return SUCESSO
        relatorio = verificar_regra(rep, regra, criar_gerador(config.semente), tentativas=config.tentativas)
        hio.escrever_saida(hio.serializar(relatorio.como_dicionario()), args.out)
        return SUCESSO if relatorio.aprovado else FALHA

    if args.comando == "wiener":
        relatorio = relatorio_wiener(rep, entradas["familia"])
        hio.escrever_saida(hio.serializar(relatorio.como_dicionario()), args.out)
        return SUCESSO if relatorio.consistente else FALHA

    if args.comando == "bochner":
        f = entradas["f"]
        positiva = verificar_positividade_torcida(f)
        resultado = reconstruir_bochner(rep, f)
        documento = {
            "eh_pd": positiva.eh_pd,
            "menor_autovalor_gram": positiva.menor_autovalor,
            "menor_autovalor_operador": resultado.menor_autovalor,
            "certificado": resultado.certificado,
            "caso": resultado.caso,
            "operador": hio.operador_para_json(resultado.operador),
        }
        hio.escrever_saida(hio.serializar(documento), args.out)
        return SUCESSO if resultado.certificado else FALHA

    if args.comando == "coorbit":
        documento = {"p": args.p, "norma": norma_coorbita(rep, entradas["vetor"], args.p, entradas["janela"])}
        hio.escrever_saida(hio.serializar(documento), args.out)
        return SUCESSO

    hio.escrever_saida(hio.serializar(hio.representacao_para_json(rep)), args.out)
    return SUCESSO


def main(argv: Optional[List[str]] = None) -> int:
    parser = _criar_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        with _entrada():
            config = _configuracao(args)
        return _executar(args, config)
    except ErroEntrada as exc:
        parser.error(str(exc))
    except (ValueError, ArithmeticError, np.linalg.LinAlgError) as exc:
        raise SystemExit(f"Falha interna em '{args.comando}': {exc}") from exc
    return FALHA


if __name__ == "__main__":
    sys.exit(main())
