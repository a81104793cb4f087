"""Testes da aritmética de grupos e caracteres."""
import numpy as np
import pytest

from harmonica.grupo import (
    ElementoGrupo,
    caractere,
    criar_grupo,
    eh_dois_regular,
    metade,
    negar,
    somar,
    tabela_caracteres,
)


def test_soma_e_negacao_em_z2xz3() -> None:
    grupo = criar_grupo([2, 3])

    assert somar(grupo, (1, 2), (1, 2)) == ElementoGrupo((0, 1))
    assert negar(grupo, (1, 1)) == ElementoGrupo((1, 2))
    assert grupo.tamanho == 6
    assert str(grupo) == "Z2xZ3"


def test_enumeracao_canonica_com_ultima_coordenada_mais_rapida() -> None:
    grupo = criar_grupo([2, 3])

    assert [e.coords for e in grupo.elementos()] == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)
    ]
    assert grupo.indice((1, 0)) == 3


@pytest.mark.parametrize("ordens", [[], [1], [0, 3], [2.5]])
def test_ordens_invalidas(ordens) -> None:
    with pytest.raises(ValueError):
        criar_grupo(ordens)


def test_elemento_com_aridade_errada() -> None:
    grupo = criar_grupo([2, 3])

    with pytest.raises(ValueError, match="coordenadas"):
        somar(grupo, (1,), (0, 1))
    with pytest.raises(ValueError, match="fora"):
        negar(grupo, (2, 0))


def test_caractere_reduz_o_produto_antes_da_exponencial() -> None:
    grupo = criar_grupo([4])

    assert caractere(grupo, (0,), (3,)) == pytest.approx(1)
    assert caractere(grupo, (1,), (1,)) == pytest.approx(1j)
    assert caractere(grupo, (3,), (3,)) == pytest.approx(1j)


def test_tabela_de_caracteres_e_unitaria_a_menos_de_escala() -> None:
    grupo = criar_grupo([2, 3])
    chi = tabela_caracteres(grupo)

    np.testing.assert_allclose(chi @ chi.conj().T, grupo.tamanho * np.eye(grupo.tamanho), atol=1e-12)


def test_metade_em_grupo_dois_regular() -> None:
    grupo = criar_grupo([3, 5])

    assert eh_dois_regular(grupo)
    for elemento in grupo.elementos():
        y = metade(grupo, elemento)
        assert somar(grupo, y, y) == elemento


def test_metade_exige_grupo_dois_regular() -> None:
    grupo = criar_grupo([2])

    assert not eh_dois_regular(grupo)
    with pytest.raises(ValueError, match="2-regular"):
        metade(grupo, (1,))


@pytest.mark.parametrize("ordens", [[2], [4], [2, 3], [3, 3]])
def test_caractere_e_bicaractere(ordens) -> None:
    grupo = criar_grupo(ordens)
    elementos = grupo.elementos()
    for x in elementos:
        for y in elementos:
            for xi in elementos:
                assert caractere(grupo, somar(grupo, x, y), xi) == pytest.approx(
                    caractere(grupo, x, xi) * caractere(grupo, y, xi)
                )
                assert caractere(grupo, xi, somar(grupo, x, y)) == pytest.approx(
                    caractere(grupo, xi, x) * caractere(grupo, xi, y)
                )
        assert caractere(grupo, negar(grupo, x), elementos[1]) == pytest.approx(
            caractere(grupo, x, elementos[1]).conjugate()
        )
