import pytest

from planewiener.plane_graph import PlaneGraph, build_from_rotation, from_faces


@pytest.fixture(scope="session")
def k4() -> PlaneGraph:
    return build_from_rotation([(2, 3, 4), (1, 4, 3), (1, 2, 4), (1, 3, 2)])


@pytest.fixture(scope="session")
def octahedron() -> PlaneGraph:
    return from_faces(
        6,
        [
            (1, 2, 3),
            (1, 4, 2), (2, 4, 5), (2, 5, 3), (3, 5, 6), (3, 6, 1), (1, 6, 4),
            (4, 6, 5),
        ],
    )


@pytest.fixture(scope="session")
def cube() -> PlaneGraph:
    return from_faces(
        8,
        [
            (1, 2, 3, 4),
            (1, 5, 6, 2), (2, 6, 7, 3), (3, 7, 8, 4), (4, 8, 5, 1),
            (5, 8, 7, 6),
        ],
    )


@pytest.fixture(scope="session")
def icosahedron() -> PlaneGraph:
    # top apex 1, upper pentagon 2..6, lower pentagon 7..11, bottom apex 12
    up = [2, 3, 4, 5, 6]
    lo = [7, 8, 9, 10, 11]
    faces = [(1, up[i], up[(i + 1) % 5]) for i in range(5)]
    faces += [(up[i], lo[i], up[(i + 1) % 5]) for i in range(5)]
    faces += [(lo[i], lo[(i + 1) % 5], up[(i + 1) % 5]) for i in range(5)]
    faces += [(12, lo[(i + 1) % 5], lo[i]) for i in range(5)]
    return from_faces(12, faces)
