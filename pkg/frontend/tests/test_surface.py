import pytest

from figviz.surface import SurfaceGridError, build_grid, load_grid, parse_rows

HEADER = "c,x,theta_opt,super_discord"


def make_csv_lines(cells):
    lines = [HEADER]
    for c, x, z in cells:
        lines.append(f"{c:.12g},{x:.12g},0.1,{z:.12g}")
    return lines


def complete_cells():
    return [
        (0.0, 0.5, 0.0), (0.0, 1.0, 0.0),
        (0.5, 0.5, 0.31), (0.5, 1.0, 0.22),
        (1.0, 0.5, 0.0), (1.0, 1.0, 0.0),
    ]


class TestParseRows:
    def test_complete(self):
        rows = parse_rows(make_csv_lines(complete_cells()))
        assert len(rows) == 6

    def test_rejects_wrong_header(self):
        with pytest.raises(SurfaceGridError, match="header"):
            parse_rows(["a,b,c,d", "0,1,0,0"])

    def test_rejects_wrong_field_count(self):
        with pytest.raises(SurfaceGridError, match="4 fields"):
            parse_rows([HEADER, "0,1,0"])

    def test_rejects_non_numeric(self):
        with pytest.raises(SurfaceGridError):
            parse_rows([HEADER, "0,1,0,oops"])

    def test_rejects_negative_values(self):
        with pytest.raises(SurfaceGridError, match="negative"):
            parse_rows([HEADER, "0,1,0,-0.2"])

    def test_rejects_empty(self):
        with pytest.raises(SurfaceGridError):
            parse_rows([])
        with pytest.raises(SurfaceGridError, match="no data"):
            parse_rows([HEADER])


class TestBuildGrid:
    def test_axes_and_values(self):
        grid = build_grid(parse_rows(make_csv_lines(complete_cells())))
        assert grid.c_axis.tolist() == [0.0, 0.5, 1.0]
        assert grid.x_axis.tolist() == [0.5, 1.0]
        assert grid.z[1, 0] == 0.31
        assert grid.z.shape == (3, 2)

    def test_row_order_irrelevant(self):
        cells = complete_cells()
        shuffled = [cells[i] for i in (3, 0, 5, 2, 4, 1)]
        a = build_grid(parse_rows(make_csv_lines(cells)))
        b = build_grid(parse_rows(make_csv_lines(shuffled)))
        assert (a.z == b.z).all()

    def test_rejects_missing_cell(self):
        with pytest.raises(SurfaceGridError, match="incomplete"):
            build_grid(parse_rows(make_csv_lines(complete_cells()[:-1])))

    def test_rejects_duplicate_cell(self):
        cells = complete_cells()[:-1] + [(0.0, 0.5, 0.1)]
        with pytest.raises(SurfaceGridError):
            build_grid(parse_rows(make_csv_lines(cells)))

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "sweep.csv"
        path.write_text("\n".join(make_csv_lines(complete_cells())) + "\n")
        grid = load_grid(path)
        assert grid.z.shape == (3, 2)
