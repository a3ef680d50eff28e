from scripts.export_figure_data import main, ratio_limits_csv


def test_ratio_limits_are_one_up_to_k():
    lines = ratio_limits_csv(10, 12).splitlines()
    assert lines[0] == "t,num,den,float"
    assert lines[1:12] == [f"{t},1,1,1.0" for t in range(11)]
    # t = k + 1 = 11: 1 - rho with rho = 10^10 / 11^11
    t, num, den, value = lines[12].split(",")
    assert (t, num, den) == ("11", str(11**11 - 10**10), str(11**11))
    assert abs(float(value) - (1 - 10**10 / 11**11)) < 1e-15


def test_export_writes_files(tmp_path):
    assert main(["--out", str(tmp_path), "--ratio-tmax", "3"]) == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["limit_dist_t10.csv", "limit_dist_t14.csv", "limit_dist_t7.csv", "ratio_limit_k10.csv"]
    first_rows = (tmp_path / "limit_dist_t7.csv").read_text().splitlines()[:2]
    assert first_rows[0] == "s,J,mass_num,mass_den,mass_float"
    assert first_rows[1].startswith("0,7,")
