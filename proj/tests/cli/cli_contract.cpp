// Exercises the installed CLI binary end to end: exit-code contract, output
// determinism, and the problem-file surface. Takes the binary path as argv[1].
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) ++failures;
    std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_contract <nullkit binary>\n";
        return 2;
    }
    std::string bin = argv[1];
    std::string dir = "/tmp/nullkit-cli-test";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) return 2;

    write_file(dir + "/unit.prob", "ring: x\nJ: x, 1 - x\n");
    write_file(dir + "/squares.prob", "ring: x\nJ: x^2, (1 - x)^2\n");
    write_file(dir + "/common-zero.prob", "ring: x, y\nJ: x, y\n");
    write_file(dir + "/monomial.prob", "ring: x, y\nJ: x^2, y^2\n");
    write_file(dir + "/cusp.prob", "ring: x, y\nJ: x^2, y^3\n");
    write_file(dir + "/nonmonomial.prob", "ring: x, y\nJ: x*y + 1\n");
    write_file(dir + "/broken.prob", "ring: x, y\nJ: x^a\n");

    auto gb = run(bin + " gb " + dir + "/unit.prob");
    expect(gb.exit_code == 0 && gb.out == "1\n", "gb of the unit ideal prints 1");

    auto gb2 = run(bin + " gb " + dir + "/monomial.prob");
    expect(gb2.exit_code == 0 && gb2.out.find("x^2") != std::string::npos &&
               gb2.out.find("y^2") != std::string::npos,
           "gb of (x^2, y^2) prints both generators");

    expect(run(bin + " gb " + dir + "/broken.prob").exit_code == 2,
           "malformed file exits 2");
    expect(run(bin + " gb " + dir + "/missing.prob").exit_code == 2,
           "missing file exits 2");

    auto cert = run(bin + " cert " + dir + "/unit.prob");
    expect(cert.exit_code == 0 &&
               cert.out.find("minimal certificate degree 1") != std::string::npos,
           "cert on {x, 1-x} finds degree 1");
    expect(run(bin + " cert " + dir + "/common-zero.prob").exit_code == 5,
           "cert with a common zero exits 5");
    auto capped = run(bin + " cert --cap 2 " + dir + "/squares.prob");
    expect(capped.exit_code == 4 && capped.out.find("not found <= 2") != std::string::npos,
           "cert below the true degree exits 4");

    auto dist = run(bin + " distinguished " + dir + "/monomial.prob");
    expect(dist.exit_code == 0 && dist.out.find("{x,y}\t2\t0\t1") != std::string::npos,
           "distinguished table for (x^2, y^2)");
    expect(run(bin + " distinguished " + dir + "/nonmonomial.prob").exit_code == 6,
           "non-monomial input exits 6");

    auto mult = run(bin + " multiplier --level 2 " + dir + "/cusp.prob");
    expect(mult.exit_code == 0 && mult.out == "x^3\nx^2*y\nx*y^3\ny^4\n",
           "multiplier ideal generators at level 2");

    auto v1 = run(bin + " --format json verify --suite example-2.3");
    auto v2 = run(bin + " --format json verify --suite example-2.3");
    expect(v1.exit_code == 0 && v1.out == v2.out && !v1.out.empty(),
           "verify is byte-identical across runs and exits 0");
    expect(run(bin + " verify --suite no-such-suite").exit_code == 3,
           "unknown suite exits 3");

    auto g1 = run(bin + " gen --count 3 --n 2 --seed 11");
    auto g2 = run(bin + " gen --count 3 --n 2 --seed 11");
    auto g3 = run(bin + " gen --count 3 --n 2 --seed 12");
    expect(g1.exit_code == 0 && g1.out == g2.out, "gen is seed-deterministic");
    expect(g1.out != g3.out, "different seeds give different corpora");

    auto bad_flag = run(bin + " gb");
    expect(bad_flag.exit_code == 2, "missing required argument exits 2");

    return failures == 0 ? 0 : 1;
}
