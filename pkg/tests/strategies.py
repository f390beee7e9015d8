from hypothesis import strategies as st

from cricket_pitch.core import Board, Position

heights = st.integers(min_value=1, max_value=6)
sides = st.lists(heights, max_size=4).map(tuple)
boards = st.builds(Board, sides, sides)
small_boards = st.builds(Board, st.lists(st.integers(1, 3), max_size=3).map(tuple),
                         st.lists(st.integers(1, 3), max_size=3).map(tuple))
positions = st.lists(small_boards, max_size=3).map(Position)
