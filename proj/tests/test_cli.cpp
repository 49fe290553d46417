#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "heatlab/experiments.hpp"
#include "heatlab/presets.hpp"

using namespace heatlab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() /
                         ("heatlab_test_" + std::to_string(::getpid()) + "_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// identical configs must give identical artifacts; runtime_ms is the one
// measured field and is compared after erasure
json without_runtime(const std::string& text) {
    json j = json::parse(text);
    j.erase("runtime_ms");
    if (j.contains("results") && j["results"].contains("runtime_ms"))
        j["results"].erase("runtime_ms");
    return j;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(HEATLAB_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("presets") {
    const auto names = preset_names();
    CHECK(std::find(names.begin(), names.end(), "cos") != names.end());
    CHECK(std::find(names.begin(), names.end(), "uniform") != names.end());

    const auto f = preset_grid("cos", 16);
    for (int j = 0; j < f.size(); ++j)
        CHECK(f.values[j].real() == doctest::Approx(std::cos(f.grid.point(j))));

    const auto u = preset_chain_initial("uniform", 4);
    for (const Rational& v : u) CHECK(v == Rational(1, 4));
    const auto ramp = preset_chain_initial("ramp", 5);
    CHECK(ramp[0] == Rational(2));
    CHECK(ramp[1] == Rational(1));
    CHECK(ramp[2] == Rational(0));

    CHECK_THROWS_AS(preset_grid("nope", 8), std::invalid_argument);
}

TEST_CASE("runners pass on their default-scale configs") {
    const fs::path dir = fresh_dir("runners");

    MixConfig mix;
    mix.n_states = 5;
    mix.n_max = 60;
    CHECK(run_mix(mix, dir.string(), OutputFormat::both).pass);

    CoupleConfig couple;
    couple.n_states = 3;
    couple.trials = 20000;
    couple.seed = 7;
    CHECK(run_couple(couple, dir.string(), OutputFormat::both).pass);

    MartingaleConfig mart;
    mart.eta = 3;
    mart.nu = 2;
    CHECK(run_martingale(mart, dir.string(), OutputFormat::both).pass);

    CalculusConfig calc;
    calc.eta = 16;
    calc.n_pairs = 10;
    CHECK(run_calculus(calc, dir.string(), OutputFormat::both).pass);

    FourierConfig fourier;
    fourier.eta = 32;
    CHECK(run_fourier(fourier, dir.string(), OutputFormat::both).pass);

    HeatConfig heat;
    CHECK(run_heat(heat, dir.string(), OutputFormat::both).pass);

    EquilibriumConfig equi;
    CHECK(run_equilibrium(equi, dir.string(), OutputFormat::both).pass);

    EquivalenceConfig equiv;
    CHECK(run_equivalence(equiv, dir.string(), OutputFormat::both).pass);

    fs::remove_all(dir);
}

TEST_CASE("artifacts are reproducible") {
    const fs::path a = fresh_dir("repro_a");
    const fs::path b = fresh_dir("repro_b");

    MixConfig mix;
    mix.n_states = 7;
    mix.n_max = 40;
    run_mix(mix, a.string(), OutputFormat::both);
    run_mix(mix, b.string(), OutputFormat::both);
    CHECK(slurp(a / "mix_N7.csv") == slurp(b / "mix_N7.csv"));
    CHECK(without_runtime(slurp(a / "mix_N7.json")) == without_runtime(slurp(b / "mix_N7.json")));

    CoupleConfig couple;
    couple.n_states = 5;
    couple.trials = 5000;
    couple.seed = 3;
    run_couple(couple, a.string(), OutputFormat::both);
    run_couple(couple, b.string(), OutputFormat::both);
    CHECK(slurp(a / "couple_N5.csv") == slurp(b / "couple_N5.csv"));

    MartingaleConfig mart;
    mart.eta = 2;
    mart.nu = 2;
    run_martingale(mart, a.string(), OutputFormat::both);
    run_martingale(mart, b.string(), OutputFormat::both);
    CHECK(slurp(a / "martingale_eta2_nu2_dump.json") == slurp(b / "martingale_eta2_nu2_dump.json"));
    CHECK(slurp(a / "martingale_eta2_nu2_association.csv") ==
          slurp(b / "martingale_eta2_nu2_association.csv"));

    // a different seed must change the Monte Carlo curve
    couple.seed = 4;
    const fs::path c = fresh_dir("repro_c");
    run_couple(couple, c.string(), OutputFormat::both);
    CHECK(slurp(a / "couple_N5.csv") != slurp(c / "couple_N5.csv"));

    fs::remove_all(a);
    fs::remove_all(b);
    fs::remove_all(c);
}

TEST_CASE("martingale dump format") {
    const fs::path dir = fresh_dir("dump");
    MartingaleConfig mart;
    mart.eta = 2;
    mart.nu = 1;
    mart.initial = {Rational(1), Rational(0)};
    run_martingale(mart, dir.string(), OutputFormat::both);

    const json dump = json::parse(slurp(dir / "martingale_eta2_nu1_dump.json"));
    CHECK(dump["eta"] == 2);
    CHECK(dump["nu"] == 1);
    REQUIRE(dump["rows"].size() == 2);
    // finest row on sixths carries the worked values (1,0,0,0,1,1)
    const auto& cells = dump["rows"][0]["cells"];
    REQUIRE(cells.size() == 6);
    const std::vector<std::string> nums{"1", "0", "0", "0", "1", "1"};
    for (size_t k = 0; k < 6; ++k) {
        CHECK(cells[k]["k"] == k);
        CHECK(cells[k]["value_num"] == nums[k]);
        CHECK(cells[k]["value_den"] == "1");
    }

    const std::string assoc = slurp(dir / "martingale_eta2_nu1_association.csv");
    CHECK(assoc.rfind("level,k,kind,state\n", 0) == 0);
    CHECK(assoc.find("0,1,second,1") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("artifact columns and format selection") {
    const fs::path dir = fresh_dir("formats");

    MixConfig mix;
    mix.n_states = 4;
    mix.n_max = 10;
    run_mix(mix, dir.string(), OutputFormat::both);
    const std::string mix_text = slurp(dir / "mix_N4.csv");
    CHECK(mix_text.rfind("n,tv_gap,eps_n,delta_n\n", 0) == 0);
    // even N: the delta column stays empty
    CHECK(mix_text.find("\n1,") != std::string::npos);
    std::istringstream lines(mix_text);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    CHECK(line.back() == ',');

    FourierConfig fourier;
    fourier.eta = 8;
    fourier.preset = "cos";
    run_fourier(fourier, dir.string(), OutputFormat::both);
    CHECK(slurp(dir / "fourier_cos_eta8.csv").rfind("m,re,im,abs\n", 0) == 0);
    CHECK(slurp(dir / "fourier_cos_eta8_function.csv").rfind("j,x_j,re,im\n", 0) == 0);

    HeatConfig heat;
    heat.eta = 16;
    heat.nu = 32;
    heat.t = 0.5;
    run_heat(heat, dir.string(), OutputFormat::both);
    CHECK(slurp(dir / "heat_cos_eta16_nu32_snapshots.csv").rfind("t,j,x_j,re,im\n", 0) == 0);

    CoupleConfig couple;
    couple.n_states = 3;
    couple.trials = 500;
    run_couple(couple, dir.string(), OutputFormat::both);
    CHECK(slurp(dir / "couple_N3.csv").rfind("n,exact_tail,mc_tail\n", 0) == 0);

    // csv-only runs write no report; json-only runs write no curves
    const fs::path csv_dir = fresh_dir("csv_only");
    run_mix(mix, csv_dir.string(), OutputFormat::csv);
    CHECK(fs::exists(csv_dir / "mix_N4.csv"));
    CHECK(!fs::exists(csv_dir / "mix_N4.json"));
    const fs::path json_dir = fresh_dir("json_only");
    run_mix(mix, json_dir.string(), OutputFormat::json);
    CHECK(!fs::exists(json_dir / "mix_N4.csv"));
    CHECK(fs::exists(json_dir / "mix_N4.json"));

    fs::remove_all(dir);
    fs::remove_all(csv_dir);
    fs::remove_all(json_dir);
}

TEST_CASE("exit codes") {
    const fs::path dir = fresh_dir("exit");
    const std::string out = " --out " + dir.string();

    CHECK(run_cli("mix --N 4 --n-max 30" + out) == 0);
    CHECK(run_cli("heat --g cos --eta 16 --nu 32 --t 1 --tol 1e-300" + out) == 1);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("mix --N 4 --unknown-key 3" + out) == 2);
    CHECK(run_cli("equivalence --eta 7 --steps 5" + out) == 2);  // parity precondition
    CHECK(run_cli("martingale --eta 2 --nu 25" + out) == 3);     // cell budget

    fs::remove_all(dir);
}
