"""Leitura e escrita de grupos, multiplicadores, operadores e funções em JSON/CSV."""
from __future__ import annotations

import csv
import io
import json
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from .convolucao import FuncaoFase
from .correspondencia import RegraCorrespondencia, criar_regra
from .espaco_fase import (
    EspacoFase,
    Multiplicador,
    MultiplicadorModificado,
    MultiplicadorTabelado,
    multiplicador_canonico,
    multiplicador_modificado,
    multiplicador_tabelado,
    multiplicador_weyl,
)
from .grupo import GrupoAbeliano, criar_grupo
from .representacao import Operador, Representacao

_PADRAO_GRUPO = re.compile(r"^Z(\d+)(?:X(Z\d+))*$", re.IGNORECASE)


def interpretar_grupo(texto: str) -> GrupoAbeliano:
    """Lê especificações como ``Z2xZ3`` (sem espaços, maiúsculas ou minúsculas)."""

    conteudo = texto.strip()
    if not _PADRAO_GRUPO.match(conteudo):
        raise ValueError(f"Especificação de grupo inválida: '{texto}' (use, por exemplo, Z2xZ3)")
    ordens = [int(parte) for parte in re.findall(r"\d+", conteudo)]
    return criar_grupo(ordens)


def carregar_de_arquivo(caminho: str | Path) -> Any:
    """Lê um documento JSON, validando existência e conteúdo."""

    path = Path(caminho)
    if not path.exists():
        raise FileNotFoundError(f"Arquivo não encontrado: {path}")
    with path.open("r", encoding="utf-8") as arquivo:
        return carregar_de_texto(arquivo.read(), origem=str(path))


def carregar_de_texto(texto: str, origem: str = "<texto>") -> Any:
    if not texto.strip():
        raise ValueError(f"Arquivo vazio: {origem}")
    try:
        return json.loads(texto)
    except json.JSONDecodeError as exc:
        raise ValueError(f"JSON inválido em {origem}, linha {exc.lineno}: {exc.msg}") from exc


def _exigir(dados: Any, chave: str, contexto: str) -> Any:
    if not isinstance(dados, dict) or chave not in dados:
        raise ValueError(f"Campo '{chave}' ausente em {contexto}")
    return dados[chave]


def _complexos(lista: Any, contexto: str) -> np.ndarray:
    if not isinstance(lista, list):
        raise ValueError(f"'{contexto}' deve ser uma lista de pares [re, im]")
    valores = np.empty(len(lista), dtype=complex)
    for posicao, par in enumerate(lista):
        if isinstance(par, (int, float)) and not isinstance(par, bool):
            valores[posicao] = float(par)
            continue
        if (
            not isinstance(par, list)
            or len(par) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in par)
        ):
            raise ValueError(f"Entrada inválida na posição {posicao} de '{contexto}': use [re, im]")
        valores[posicao] = complex(par[0], par[1])
    return valores


def _pares(valores: np.ndarray) -> List[List[float]]:
    return [[float(v.real), float(v.imag)] for v in np.asarray(valores, dtype=complex).reshape(-1)]


def grupo_de_json(dados: Any) -> GrupoAbeliano:
    if isinstance(dados, str):
        return interpretar_grupo(dados)
    if isinstance(dados, list):
        return criar_grupo(dados)
    raise ValueError("Grupo deve ser uma lista de ordens ou um texto como 'Z2xZ3'")


def grupo_para_json(grupo: GrupoAbeliano) -> List[int]:
    return list(grupo.ordens)


def multiplicador_de_json(dados: Any) -> Multiplicador:
    """Aceita ``{"kind": canonical|weyl|modified|table, "group": …}``."""

    tipo = _exigir(dados, "kind", "multiplicador")
    grupo = grupo_de_json(_exigir(dados, "group", "multiplicador"))
    if tipo == "canonical":
        return multiplicador_canonico(grupo)
    if tipo == "weyl":
        return multiplicador_weyl(grupo)
    if tipo == "modified":
        base = multiplicador_de_json({"kind": dados.get("base", "canonical"), "group": list(grupo.ordens)})
        return multiplicador_modificado(base, _complexos(_exigir(dados, "phase", "multiplicador"), "phase"))
    if tipo == "table":
        linhas = _exigir(dados, "table", "multiplicador")
        if not isinstance(linhas, list):
            raise ValueError("'table' deve ser uma lista de linhas")
        tabela = [_complexos(linha, f"table[{i}]") for i, linha in enumerate(linhas)]
        tamanhos = {len(linha) for linha in tabela}
        if len(tamanhos) > 1:
            raise ValueError("Linhas de 'table' com comprimentos diferentes")
        return multiplicador_tabelado(grupo, np.array(tabela))
    raise ValueError(f"Tipo de multiplicador desconhecido: '{tipo}'")


def multiplicador_para_json(m: Multiplicador) -> Dict[str, Any]:
    dados: Dict[str, Any] = {"kind": m.tipo, "group": grupo_para_json(m.grupo)}
    if isinstance(m, MultiplicadorModificado):
        dados["base"] = m.base.tipo
        dados["phase"] = _pares(m.fase)
    elif isinstance(m, MultiplicadorTabelado):
        dados["table"] = [_pares(linha) for linha in m.tabela]
    return dados


def operador_de_json(dados: Any, dim: Optional[int] = None) -> Operador:
    """``{"dim": n, "entries": [[re, im], …]}`` em ordem de linhas."""

    n = _exigir(dados, "dim", "operador")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"Dimensão inválida: {n!r}")
    entradas = _complexos(_exigir(dados, "entries", "operador"), "entries")
    if entradas.size != n * n:
        raise ValueError(f"Operador de dimensão {n} exige {n * n} entradas; recebidas {entradas.size}")
    if dim is not None and n != dim:
        raise ValueError(f"Operador de dimensão {n} incompatível com N = {dim}")
    return Operador(entradas.reshape(n, n))


def operador_para_json(A: Operador) -> Dict[str, Any]:
    return {"dim": A.dim, "entries": _pares(A.matriz)}


def funcao_de_json(dados: Any, espaco: EspacoFase) -> FuncaoFase:
    return FuncaoFase(espaco, _complexos(_exigir(dados, "values", "função"), "values"))


def funcao_para_json(f: FuncaoFase) -> Dict[str, Any]:
    return {"values": _pares(f.valores)}


def vetor_de_json(dados: Any, dim: int) -> np.ndarray:
    vetor = _complexos(_exigir(dados, "values", "vetor"), "values")
    if vetor.size != dim:
        raise ValueError(f"Vetor com {vetor.size} entradas; N = {dim}")
    return vetor


def regra_de_json(dados: Any, dim: int) -> RegraCorrespondencia:
    return criar_regra(
        operador_de_json(_exigir(dados, "b1", "regra"), dim),
        operador_de_json(_exigir(dados, "b2", "regra"), dim),
    )


def regra_para_json(regra: RegraCorrespondencia) -> Dict[str, Any]:
    return {"b1": operador_para_json(regra.b1), "b2": operador_para_json(regra.b2)}


def familia_de_json(dados: Any, dim: int) -> List[Operador]:
    membros = _exigir(dados, "family", "família")
    if not isinstance(membros, list):
        raise ValueError("'family' deve ser uma lista de operadores")
    if not membros:
        raise ValueError("'family' não pode ser vazia")
    return [operador_de_json(membro, dim) for membro in membros]


def representacao_para_json(rep: Representacao) -> Dict[str, Any]:
    espaco = rep.espaco
    return {
        "group": grupo_para_json(espaco.grupo),
        "multiplier": espaco.multiplicador.tipo,
        "unitaries": [
            {
                "point": [list(p.pos), list(p.mom)],
                "matrix": operador_para_json(Operador(U)),
            }
            for p, U in zip(espaco.pontos(), rep.unitarios)
        ],
        "parity": operador_para_json(rep.R),
    }


def serializar(dados: Any) -> str:
    return json.dumps(dados, ensure_ascii=False, indent=2) + "\n"


def escrever_saida(texto: str, caminho: Optional[Path] = None) -> None:
    """Escreve em ``caminho`` ou, sem caminho, na saída padrão."""

    if caminho is None:
        sys.stdout.write(texto)
        return
    Path(caminho).write_text(texto, encoding="utf-8")


def wigner_para_csv(f: FuncaoFase, avisos: Sequence[str] = ()) -> str:
    """Uma linha por ponto ``(x, ξ)`` com as partes real e imaginária."""

    grupo = f.espaco.grupo
    saida = io.StringIO()
    saida.write(f"# grupo={grupo} multiplicador={f.espaco.multiplicador.tipo} peso=1/{grupo.tamanho}\n")
    saida.write("# normalizacao: peso * soma(wigner) = tr(rho)\n")
    for aviso in avisos:
        saida.write(f"# aviso: {aviso}\n")
    escritor = csv.writer(saida, lineterminator="\n")
    escritor.writerow(
        [f"x{j}" for j in range(grupo.posto)] + [f"xi{j}" for j in range(grupo.posto)] + ["re", "im"]
    )
    for ponto, valor in zip(f.espaco.pontos(), f.valores):
        escritor.writerow(list(ponto.pos) + list(ponto.mom) + [repr(float(valor.real)), repr(float(valor.imag))])
    return saida.getvalue()
