// latcert: construct and verify certificates for lattice embeddings into
// Isom(R^n) x prod Isom(DL); see README for the certificate schema.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "latcert/affine.hpp"
#include "latcert/errors.hpp"
#include "latcert/lambda.hpp"
#include "latcert/pipelines.hpp"
#include "latcert/polyparse.hpp"

using namespace latcert;

namespace {

int exit_for(const error& e) {
    switch (e.kind()) {
    case errc::parse_error: return 2;
    case errc::memory_budget_exceeded: return 4;
    default: return 3; // precondition / precision
    }
}

// relative output paths honour LATCERT_OUT_DIR when it is set
std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("LATCERT_OUT_DIR");
    if (!dir || !*dir || path.empty() || path.front() == '/') return path;
    return std::string(dir) + "/" + path;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        write_text_atomic(resolve_out(out), text);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// JSON object, or "key = value" lines; a repeated key collects into an array
Json parse_config_text(const std::string& text) {
    std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        Json j = Json::parse(body, nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "malformed JSON config");
        if (!j.is_object()) fail(errc::parse_error, "config must be a JSON object");
        return j;
    }
    Json j = Json::object();
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(errc::parse_error, "expected `key = value`, got: " + trim(line));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) fail(errc::parse_error, "empty key in config line: " + trim(line));
        if (j.contains(key)) {
            if (!j[key].is_array()) j[key] = Json::array({j[key]});
            j[key].push_back(val);
        } else {
            j[key] = val;
        }
    }
    return j;
}

const Json& require_key(const Json& cfg, const std::string& key) {
    if (!cfg.contains(key)) fail(errc::parse_error, "config key missing: " + key);
    return cfg.at(key);
}

long long_from(const Json& v, const std::string& key) {
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
        const std::string s = trim(v.get<std::string>());
        try {
            size_t pos = 0;
            long r = std::stol(s, &pos);
            if (pos == s.size()) return r;
        } catch (const std::exception&) {
        }
    }
    fail(errc::parse_error, "expected an integer for config key: " + key);
}

long cfg_long(const Json& cfg, const std::string& key, long dflt) {
    return cfg.contains(key) ? long_from(cfg.at(key), key) : dflt;
}

std::string cfg_string(const Json& cfg, const std::string& key, const std::string& dflt) {
    if (!cfg.contains(key)) return dflt;
    const Json& v = cfg.at(key);
    if (!v.is_string()) fail(errc::parse_error, "expected a string for config key: " + key);
    return v.get<std::string>();
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<long> cfg_long_list(const Json& cfg, const std::string& key) {
    if (!cfg.contains(key)) return {};
    const Json& v = cfg.at(key);
    std::vector<long> out;
    if (v.is_array()) {
        for (const Json& e : v) out.push_back(long_from(e, key));
        return out;
    }
    if (v.is_string()) {
        std::string s = trim(v.get<std::string>());
        if (s.empty()) return {};
        for (const std::string& part : split_on(s, ','))
            out.push_back(long_from(Json(trim(part)), key));
        return out;
    }
    fail(errc::parse_error, "expected a list for config key: " + key);
}

Rational cfg_rational(const Json& cfg, const std::string& key, const Rational& dflt) {
    if (!cfg.contains(key)) return dflt;
    const Json& v = cfg.at(key);
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    fail(errc::parse_error, "expected a rational for config key: " + key);
}

// "a,b;c,d" rows by ';', or a JSON array of rows
QMatrix matrix_from(const Json& v) {
    if (v.is_array()) return parse_matrix(v);
    if (v.is_string()) {
        std::vector<std::vector<Rational>> rows;
        for (const std::string& row : split_on(v.get<std::string>(), ';')) {
            std::vector<Rational> entries;
            for (const std::string& e : split_on(row, ',')) entries.push_back(parse_rational(e));
            rows.push_back(std::move(entries));
        }
        return QMatrix::from_rows(rows);
    }
    fail(errc::parse_error, "expected a matrix (string rows or array of arrays)");
}

// one matrix, or a list of them (array of strings / array of row-arrays)
std::vector<QMatrix> matrices_from(const Json& v) {
    if (v.is_string()) return {matrix_from(v)};
    if (v.is_array() && !v.empty()) {
        const Json& head = v.at(0);
        if (head.is_string()) {
            std::vector<QMatrix> out;
            for (const Json& e : v) out.push_back(matrix_from(e));
            return out;
        }
        if (head.is_array() && !head.empty() && head.at(0).is_array()) {
            std::vector<QMatrix> out;
            for (const Json& e : v) out.push_back(matrix_from(e));
            return out;
        }
        return {matrix_from(v)};
    }
    fail(errc::parse_error, "expected one matrix or a list of matrices");
}

Json matrix_config_json(const QMatrix& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.dim(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Integer integer_from(const Json& v, const std::string& key) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
        Rational r = parse_rational(v.get<std::string>());
        if (r.get_den() != 1) fail(errc::parse_error, "expected an integer for: " + key);
        return Integer(r.get_num());
    }
    fail(errc::parse_error, "expected an integer for: " + key);
}

// {"coeffs": [c0,...], "denom": m} or the string "c0,c1,.../m"
CentralizerElement candidate_from(const Json& v, const QMatrix& base) {
    std::vector<Integer> coeffs;
    Integer denom(1);
    if (v.is_object()) {
        for (const Json& c : require_key(v, "coeffs")) coeffs.push_back(integer_from(c, "coeffs"));
        if (v.contains("denom")) denom = integer_from(v.at("denom"), "denom");
    } else if (v.is_string()) {
        std::vector<std::string> halves = split_on(v.get<std::string>(), '/');
        if (halves.size() > 2) fail(errc::parse_error, "candidate has more than one '/'");
        for (const std::string& c : split_on(halves[0], ','))
            coeffs.push_back(integer_from(Json(trim(c)), "candidate"));
        if (halves.size() == 2) denom = integer_from(Json(trim(halves[1])), "candidate");
    } else {
        fail(errc::parse_error, "candidate must be an object or a string");
    }
    return make_centralizer_element(base, std::move(coeffs), denom);
}

std::vector<CentralizerElement> candidates_from(const Json& cfg, const QMatrix& base) {
    Json raw = Json::array();
    if (cfg.contains("candidates"))
        raw = cfg.at("candidates");
    else if (cfg.contains("candidate"))
        raw = cfg.at("candidate").is_array() ? cfg.at("candidate")
                                             : Json::array({cfg.at("candidate")});
    if (!raw.is_array()) fail(errc::parse_error, "candidates must be a list");
    std::vector<CentralizerElement> out;
    for (const Json& v : raw) out.push_back(candidate_from(v, base));
    return out;
}

int finish_certificate(Certificate& cert, Json resolved, const std::string& out) {
    cert.inputs["config"] = std::move(resolved);
    emit(canonical_json(cert.to_json()), out);
    return cert.overall() == "Verified" ? 0 : 1;
}

int run_certify(const std::string& config_path, const std::string& out_flag) {
    Json cfg = parse_config_text(slurp(config_path));
    std::string construction = cfg_string(cfg, "construction", "");
    if (construction.empty()) fail(errc::parse_error, "config key missing: construction");
    std::string out = !out_flag.empty() ? out_flag : cfg_string(cfg, "out", "");
    int precision = static_cast<int>(cfg_long(cfg, "precision", 10));

    Json resolved;
    resolved["construction"] = construction;
    resolved["precision"] = precision;

    if (construction == "sl2-envelope") {
        QMatrix m = matrix_from(require_key(cfg, "matrix"));
        long power_bound = cfg_long(cfg, "power_bound", 10);
        resolved["matrix"] = matrix_config_json(m);
        resolved["power_bound"] = power_bound;
        ConstructionResult res = certify_sl2_envelope(m, precision, power_bound);
        return finish_certificate(res.cert, std::move(resolved), out);
    }
    if (construction == "shared-envelope") {
        long n = long_from(require_key(cfg, "n"), "n");
        resolved["n"] = n;
        ConstructionResult res = certify_shared_envelope(n, precision);
        return finish_certificate(res.cert, std::move(resolved), out);
    }
    if (construction == "unit-lattice") {
        QMatrix m = matrix_from(require_key(cfg, "matrix"));
        std::vector<long> primes = cfg_long_list(cfg, "primes");
        std::vector<CentralizerElement> cands = candidates_from(cfg, m);
        Rational width = cfg_rational(cfg, "real_width", Rational(1, 1000));
        resolved["matrix"] = matrix_config_json(m);
        resolved["primes"] = primes;
        Json rc = Json::array();
        for (const auto& g : cands) rc.push_back(g.str());
        resolved["candidates"] = std::move(rc);
        resolved["real_width"] = to_string(width);
        ConstructionResult res = certify_unit_lattice(m, primes, cands, width, precision);
        return finish_certificate(res.cert, std::move(resolved), out);
    }
    fail(errc::parse_error, "unknown construction: " + construction);
}

GroupDescriptor group_from(const Json& cfg, Json& resolved) {
    std::string kind = cfg_string(cfg, "kind", "");
    if (kind.empty()) fail(errc::parse_error, "group config key missing: kind");
    resolved["kind"] = kind;
    if (kind == "trivial") return GroupDescriptor::trivial();
    if (kind == "affine") {
        std::vector<QMatrix> acts = matrices_from(require_key(cfg, "matrix"));
        std::vector<long> primes = cfg_long_list(cfg, "primes");
        long d = cfg_long(cfg, "dimension", acts.empty() ? 0 : acts[0].dim());
        std::vector<Integer> pi(primes.begin(), primes.end());
        resolved["dimension"] = d;
        resolved["primes"] = primes;
        Json ms = Json::array();
        for (const auto& m : acts) ms.push_back(matrix_config_json(m));
        resolved["matrices"] = std::move(ms);
        return GroupDescriptor::affine(d, pi, acts);
    }
    if (kind == "product-wreath") {
        long free_rank = cfg_long(cfg, "free_rank", 2);
        long lamp = long_from(require_key(cfg, "lamp"), "lamp");
        resolved["free_rank"] = free_rank;
        resolved["lamp"] = lamp;
        return GroupDescriptor::product_wreath(free_rank, lamp);
    }
    if (kind == "lambda") {
        long d = long_from(require_key(cfg, "d"), "d");
        long q = long_from(require_key(cfg, "q"), "q");
        resolved["d"] = d;
        resolved["q"] = q;
        return GroupDescriptor::lambda_group(d, q);
    }
    fail(errc::parse_error, "unknown group kind: " + kind);
}

int run_growth(const std::string& config_a, const std::string& config_b, long radius, long cap,
               const std::string& csv_out, const std::string& report_out) {
    Json ra, rb;
    GroupDescriptor a = group_from(parse_config_text(slurp(config_a)), ra);
    GroupDescriptor b = group_from(parse_config_text(slurp(config_b)), rb);
    GrowthComparison g = growth_compare(a, b, radius, static_cast<std::size_t>(cap));
    Json report = g.report;
    Json config;
    config["group_a"] = std::move(ra);
    config["group_b"] = std::move(rb);
    config["radius"] = radius;
    config["cap"] = cap;
    report["config"] = std::move(config);
    emit(g.to_csv(), csv_out);
    if (!report_out.empty()) emit(canonical_json(report), report_out);
    return 0;
}

std::vector<long> dl_branchings(long d, long n, const std::string& branchings) {
    if (!branchings.empty()) {
        std::vector<long> out;
        for (const std::string& part : split_on(branchings, ','))
            out.push_back(long_from(Json(trim(part)), "branchings"));
        return out;
    }
    return std::vector<long>(static_cast<size_t>(d), n);
}

int run_dl_ball(long d, long n, const std::string& branchings, long radius, long cap,
                const std::string& csv_out, const std::string& report_out) {
    std::vector<long> br = dl_branchings(d, n, branchings);
    DLBall ball = dl_ball(dl_base(br), radius, static_cast<size_t>(cap));
    auto edges = dl_edges(ball.vertices);
    std::ostringstream csv;
    csv << "src,dst\n";
    for (const auto& [u, v] : edges) csv << u.key() << "," << v.key() << "\n";
    emit(csv.str(), csv_out);
    if (!report_out.empty()) {
        Json j;
        j["config"] = {{"branchings", br}, {"radius", radius}, {"cap", cap}};
        j["vertex_count"] = static_cast<long>(ball.vertices.size());
        j["sphere_sizes"] = ball.sphere_sizes;
        j["edge_count"] = static_cast<long>(edges.size());
        emit(canonical_json(j), report_out);
    }
    return 0;
}

int run_dl_orbit(const std::string& group, long q, long radius, long cap,
                 const std::string& out) {
    if (group != "lamplighter")
        fail(errc::invalid_argument, "only --group lamplighter is supported");
    std::vector<LaurentAffineMap> gens = lamplighter_dl_generators(q);
    DLVertex base = dl_base({q, q});
    OrbitBall orbit = orbit_bfs(gens, base, radius, static_cast<size_t>(cap));
    long covered = -1;
    for (long g = 0; g <= radius; ++g) {
        DLBall ball = dl_ball(base, g, static_cast<size_t>(cap));
        if (!std::includes(orbit.vertices.begin(), orbit.vertices.end(), ball.vertices.begin(),
                           ball.vertices.end()))
            break;
        covered = g;
    }
    Json j;
    j["config"] = {{"group", group}, {"q", q}, {"radius", radius}, {"cap", cap}};
    j["orbit_size"] = static_cast<long>(orbit.vertices.size());
    j["orbit_sphere_sizes"] = orbit.sphere_sizes;
    j["covered_graph_radius"] = covered;
    j["coverage_offset"] = radius - covered;
    emit(canonical_json(j), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for lattice constructions acting on R^n and "
                 "Diestel-Leader graphs"};
    app.require_subcommand(1);
    int rc = 0;

    // split-primes
    std::string sp_poly, sp_out;
    long sp_bound = 50;
    CLI::App* sp = app.add_subcommand("split-primes",
                                      "primes p <= bound where the polynomial splits over Q_p");
    sp->add_option("poly", sp_poly, "monic integer polynomial, e.g. \"t^3-5t^2+6t-1\" or "
                                    "\"-1,6,-5,1\"")
        ->required();
    sp->add_option("--bound", sp_bound, "largest prime to test (default 50)");
    sp->add_option("--out", sp_out, "output path (default stdout)");
    sp->callback([&] {
        RatPoly f = parse_poly(sp_poly);
        SplitPrimesResult r = splitting_prime_set(f, sp_bound);
        Json j = r.to_json();
        j["config"] = {{"poly", f.str()}, {"bound", sp_bound}};
        emit(canonical_json(j), sp_out);
        rc = 0;
    });

    // example
    std::string ex_out, ex_poly;
    long ex_precision = 10;
    CLI::App* ex = app.add_subcommand("example", "run the built-in 3x3 worked construction");
    ex->add_option("--precision", ex_precision, "p-adic digit precision (default 10)");
    ex->add_option("--f", ex_poly, "override the cubic (expected values stay pinned)");
    ex->add_option("--out", ex_out, "output path (default stdout)");
    ex->callback([&] {
        RatPoly f;
        const RatPoly* fp = nullptr;
        if (!ex_poly.empty()) {
            f = parse_poly(ex_poly);
            fp = &f;
        }
        Certificate cert = example_certificate(static_cast<int>(ex_precision), fp);
        Json resolved;
        resolved["precision"] = ex_precision;
        resolved["f"] = fp ? fp->str() : cert.inputs["f"].get<std::string>();
        rc = finish_certificate(cert, std::move(resolved), ex_out);
    });

    // certify
    std::string ct_config, ct_out;
    CLI::App* ct = app.add_subcommand("certify", "run a construction pipeline from a config file");
    ct->add_option("--config", ct_config, "JSON or key=value config file")->required();
    ct->add_option("--out", ct_out, "output path (overrides `out` in the config)");
    ct->callback([&] { rc = run_certify(ct_config, ct_out); });

    // dl
    CLI::App* dl = app.add_subcommand("dl", "Diestel-Leader graph utilities");
    dl->require_subcommand(1);
    long dl_d = 2, dl_n = 2, dl_radius = 3, dl_cap = 5000000, dl_q = 2;
    std::string dl_branch, dl_csv, dl_out, dl_group = "lamplighter";

    CLI::App* dld = dl->add_subcommand("degree", "vertex degree of DL(n_1,...,n_d)");
    dld->add_option("--d", dl_d, "number of tree factors (default 2)");
    dld->add_option("--n", dl_n, "common branching (default 2)");
    dld->add_option("--branchings", dl_branch, "comma list overriding --d/--n");
    dld->callback([&] {
        std::vector<long> br = dl_branchings(dl_d, dl_n, dl_branch);
        std::cout << dl_neighbors(dl_base(br)).size() << "\n";
        rc = 0;
    });

    CLI::App* dlb = dl->add_subcommand("ball", "BFS ball and its edge list");
    dlb->add_option("--d", dl_d, "number of tree factors (default 2)");
    dlb->add_option("--n", dl_n, "common branching (default 2)");
    dlb->add_option("--branchings", dl_branch, "comma list overriding --d/--n");
    dlb->add_option("--radius", dl_radius, "BFS radius (default 3)");
    dlb->add_option("--cap", dl_cap, "vertex budget (default 5000000)");
    dlb->add_option("--csv", dl_csv, "edge list path (default stdout)");
    dlb->add_option("--out", dl_out, "summary JSON path");
    dlb->callback(
        [&] { rc = run_dl_ball(dl_d, dl_n, dl_branch, dl_radius, dl_cap, dl_csv, dl_out); });

    CLI::App* dlo = dl->add_subcommand("orbit", "word-ball orbit vs graph-ball coverage");
    dlo->add_option("--group", dl_group, "acting group (lamplighter)");
    dlo->add_option("--q", dl_q, "lamp count, prime (default 2)");
    dlo->add_option("--radius", dl_radius, "word radius (default 3)");
    dlo->add_option("--cap", dl_cap, "vertex budget (default 5000000)");
    dlo->add_option("--out", dl_out, "report path (default stdout)");
    dlo->callback([&] { rc = run_dl_orbit(dl_group, dl_q, dl_radius, dl_cap, dl_out); });

    // growth
    std::string gr_a, gr_b, gr_csv, gr_out;
    long gr_radius = 8, gr_cap = 5000000;
    CLI::App* gr = app.add_subcommand("growth", "word-ball growth of two groups side by side");
    gr->add_option("config_a", gr_a, "group config file (kind = trivial|affine|product-wreath|lambda)")
        ->required();
    gr->add_option("config_b", gr_b, "group config file")->required();
    gr->add_option("--radius", gr_radius, "ball radius (default 8)");
    gr->add_option("--cap", gr_cap, "vertex budget (default 5000000)");
    gr->add_option("--csv", gr_csv, "growth table path (default stdout)");
    gr->add_option("--out", gr_out, "report JSON path");
    gr->callback([&] { rc = run_growth(gr_a, gr_b, gr_radius, gr_cap, gr_csv, gr_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "error [" << errc_name(e.kind()) << "]: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
