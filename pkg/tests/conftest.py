import hypothesis.strategies as st

import dnumbers as dn

LETTERS = "abcdef"


def _pair_names(n):
    names = list(LETTERS[:n]) + [dn.X_LABEL]
    return [(names[i], names[j])
            for i in range(len(names)) for j in range(i + 1, len(names))]


@st.composite
def frames(draw, max_size=4):
    n = draw(st.integers(min_value=1, max_value=max_size))
    degrees = []
    for pair in _pair_names(n):
        if draw(st.booleans()):
            degrees.append((pair, draw(st.floats(min_value=0.0, max_value=1.0))))
    return dn.build_frame(LETTERS[:n], 2, degrees)


@st.composite
def raw_dnumbers(draw, max_size=4):
    frame = draw(frames(max_size))
    focal = draw(st.lists(st.sampled_from(range(1, frame.full_mask + 1)),
                          unique=True, min_size=1, max_size=4))
    weights = draw(st.lists(st.floats(min_value=0.01, max_value=1.0),
                            min_size=len(focal), max_size=len(focal)))
    total = draw(st.floats(min_value=0.05, max_value=1.0))
    scale = sum(weights)
    return dn.build_dnumber(
        frame, [(m, w / scale * total) for m, w in zip(focal, weights)])


@st.composite
def completed_dnumbers(draw, max_size=4):
    return dn.complete(draw(raw_dnumbers(max_size)))
