#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "cubezeta/verify.hpp"

// cubezeta: compute, factor, and verify zeta functions of periodic cubical
// lattices. Exit codes: 0 success, 2 usage, 3 resource bound, 4 verification
// failure.

namespace {

using namespace cubezeta;

std::string json_int_array(const std::vector<mpz_class>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

std::string json_poly(const IntPoly& p) { return json_int_array(p.coeffs()); }

std::string json_u64_array(const std::vector<u64>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void check_sides_arg(const std::vector<u64>& n) {
    if (n.empty()) throw CLI::ValidationError("--n", "at least one side length required");
    for (u64 s : n)
        if (s < 2) throw CLI::ValidationError("--n", "side lengths must be >= 2");
}

int cmd_zeta(const std::vector<u64>& n, u64 d, const std::string& format, bool pretty) {
    check_sides_arg(n);
    LatticeSpec spec(n);
    if (d < 1 || d > spec.q()) throw CLI::ValidationError("--d", "need 1 <= d <= q");
    ZetaInverse z = (d == spec.q()) ? zeta_top(spec) : zeta_general_d(spec, d);

    if (format == "json") {
        std::string out = "{\"n\":" + json_u64_array(n) + ",\"d\":" + std::to_string(d) +
                          ",\"zeta_inverse\":" + json_poly(z.poly) + ",\"factors\":[";
        for (std::size_t i = 0; i < z.factors.size(); ++i) {
            if (i) out += ",";
            out += "{\"dvec\":" + json_u64_array(z.factors[i].dvec.entries) +
                   ",\"exponent\":" + std::to_string(z.factors[i].exponent) +
                   ",\"psi\":" + json_poly(z.factors[i].psi) + "}";
        }
        out += "],\"prefactors\":{\"(1-u^2)\":" + std::to_string(z.exp_one_minus_u2) +
               ",\"(1-u)\":" + std::to_string(z.exp_one_minus_u) + ",\"(1+bu)\":[" +
               std::to_string(z.linear_b) + "," + std::to_string(z.exp_one_plus_bu) + "]}}";
        std::cout << out << "\n";
        return 0;
    }
    std::cout << "zeta_inverse: " << (pretty ? z.poly.to_pretty("u") : z.poly.to_text()) << "\n";
    std::cout << "prefactor (1-u^2)^" << z.exp_one_minus_u2 << " (1-u)^" << z.exp_one_minus_u
              << " (1+" << z.linear_b << "u)^" << z.exp_one_plus_bu << "\n";
    for (const auto& f : z.factors)
        std::cout << "factor dvec=(" << [&] {
            std::string s;
            for (std::size_t i = 0; i < f.dvec.entries.size(); ++i)
                s += (i ? "," : "") + std::to_string(f.dvec.entries[i]);
            return s;
        }() << ") eps=" << f.exponent
                  << " psi: " << (pretty ? f.psi.to_pretty() : f.psi.to_text()) << "\n";
    return 0;
}

int cmd_psi(const std::vector<u64>& d, bool orbit_split, const std::string& format, bool pretty) {
    if (d.empty()) throw CLI::ValidationError("--d", "at least one entry required");
    DVec dvec(d);
    if (!orbit_split) {
        PsiPolynomial p = psi_multi(dvec);
        if (format == "json") {
            std::cout << "{\"dvec\":" << json_u64_array(d) << ",\"poly\":" << json_poly(p.poly)
                      << "}\n";
        } else {
            std::cout << (pretty ? p.poly.to_pretty() : p.poly.to_text()) << "\n";
        }
        return 0;
    }
    auto dec = orbit_decompose(dvec);
    std::string json = "{\"dvec\":" + json_u64_array(d) + ",\"orbits\":[";
    for (std::size_t oi = 0; oi < dec.orbits.size(); ++oi) {
        OrbitPolynomial op = psi_orbit(dvec, dec.orbits[oi]);
        if (format == "json") {
            if (oi) json += ",";
            json += "{\"orbit_rep\":" + json_u64_array(op.representative) +
                    ",\"poly\":" + json_poly(op.poly) + ",\"irr_core\":" + json_poly(op.irr_core) +
                    ",\"multiplicity\":" + std::to_string(op.multiplicity) +
                    ",\"irreducible\":" + (is_irreducible(op) ? "true" : "false") + "}";
        } else {
            std::cout << "orbit rep=(" << [&] {
                std::string s;
                for (std::size_t i = 0; i < op.representative.size(); ++i)
                    s += (i ? "," : "") + std::to_string(op.representative[i]);
                return s;
            }() << ") multiplicity=" << op.multiplicity
                      << (is_irreducible(op) ? " irreducible" : " reducible")
                      << " poly: " << (pretty ? op.poly.to_pretty() : op.poly.to_text())
                      << " irr_core: " << (pretty ? op.irr_core.to_pretty() : op.irr_core.to_text())
                      << "\n";
        }
    }
    if (format == "json") std::cout << json << "]}\n";
    return 0;
}

int cmd_orbits(const std::vector<u64>& d, const std::string& format) {
    if (d.empty()) throw CLI::ValidationError("--d", "at least one entry required");
    DVec dvec(d);
    auto dec = orbit_decompose(dvec);
    u64 formula = orb_count_formula(dvec);
    std::size_t betti = gcd_graph(dvec).reduced_betti0();
    if (format == "json") {
        std::string out = "{\"dvec\":" + json_u64_array(d) + ",\"orbits\":[";
        for (std::size_t oi = 0; oi < dec.orbits.size(); ++oi) {
            if (oi) out += ",";
            out += "[";
            for (std::size_t i = 0; i < dec.orbits[oi].size(); ++i) {
                if (i) out += ",";
                out += json_u64_array(dec.orbits[oi][i]);
            }
            out += "]";
        }
        out += "],\"orb_formula\":" + std::to_string(formula) +
               ",\"betti\":" + std::to_string(betti) + "}";
        std::cout << out << "\n";
        return 0;
    }
    std::cout << "orbits: " << dec.orbits.size() << " (formula: " << formula
              << ", reduced betti0: " << betti << ")\n";
    for (const auto& orbit : dec.orbits) {
        std::cout << " ";
        for (const auto& t : orbit) {
            std::cout << " (";
            for (std::size_t i = 0; i < t.size(); ++i)
                std::cout << (i ? "," : "") << t[i];
            std::cout << ")";
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_spectrum(const std::vector<u64>& n, u64 d, const std::string& format) {
    check_sides_arg(n);
    LatticeSpec spec(n);
    if (d > spec.q()) throw CLI::ValidationError("--d", "need 0 <= d <= q");
    auto spectrum = laplacian_spectrum(spec, d);
    if (format == "json") {
        std::string out = "{\"n\":" + json_u64_array(n) + ",\"d\":" + std::to_string(d) +
                          ",\"eigenvalues\":[";
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            if (i) out += ",";
            out += "[" + format_double(spectrum[i].first) + "," +
                   std::to_string(spectrum[i].second) + "]";
        }
        std::cout << out << "]}\n";
        return 0;
    }
    for (const auto& [v, m] : spectrum)
        std::cout << format_double(v) << " x" << m << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, u64 qmax, u64 dmax, u64 mmax) {
    SuiteReport rep;
    if (suite == "orbits") rep = verify_orbits(qmax, dmax);
    else if (suite == "linear-table") rep = verify_linear_table(dmax);
    else if (suite == "observations") rep = verify_observations(mmax);
    else rep = run_suite(suite);  // throws std::domain_error on unknown names

    for (const auto& c : rep.cases)
        std::cout << (c.ok ? "PASS" : (rep.informational ? "FINDING" : "FAIL")) << " [" << rep.suite
                  << "] " << c.name << ": " << c.detail << "\n";
    bool hard_ok = rep.all_ok();
    std::cout << (hard_ok ? "suite passed" : "suite FAILED") << "\n";
    return hard_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta functions of periodic cubical lattices"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "text";
    bool pretty = false;
    unsigned threads = 0;
    app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--pretty", pretty);
    app.add_option("--threads", threads);

    std::vector<u64> n_arg, d_list;
    u64 d_arg = 0;
    auto* zeta = app.add_subcommand("zeta", "reciprocal zeta polynomial and factorization");
    zeta->add_option("--n", n_arg, "side lengths")->required()->delimiter(',');
    zeta->add_option("--d", d_arg, "skeleton dimension (default q)");

    auto* psi = app.add_subcommand("psi", "cyclotomic-like Psi polynomials");
    bool orbit_split = false;
    psi->add_option("--d", d_list, "tuple d1,...,dq")->required()->delimiter(',');
    psi->add_flag("--orbit-split", orbit_split);

    auto* orbits = app.add_subcommand("orbits", "Galois orbit decomposition");
    std::vector<u64> orbit_d;
    orbits->add_option("--d", orbit_d, "tuple d1,...,dq")->required()->delimiter(',');

    auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum with multiplicities");
    std::vector<u64> spec_n;
    u64 spec_d = 0;
    spectrum->add_option("--n", spec_n, "side lengths")->required()->delimiter(',');
    spectrum->add_option("--d", spec_d, "cube dimension")->required();

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    std::string suite;
    u64 qmax = 3, dmax = 0, mmax = 30;
    std::string cases = "default";
    verify->add_option("suite", suite)->required();
    verify->add_option("--qmax", qmax);
    verify->add_option("--dmax", dmax);
    verify->add_option("--mmax", mmax);
    verify->add_option("--cases", cases, "case set (only 'default' is defined)");

    try {
        app.parse(argc, argv);
        set_thread_count(threads);
        if (zeta->parsed())
            return cmd_zeta(n_arg, d_arg == 0 ? n_arg.size() : d_arg, format, pretty);
        if (psi->parsed()) return cmd_psi(d_list, orbit_split, format, pretty);
        if (orbits->parsed()) return cmd_orbits(orbit_d, format);
        if (spectrum->parsed()) return cmd_spectrum(spec_n, spec_d, format);
        if (verify->parsed()) {
            if (dmax == 0) dmax = (suite == "linear-table") ? 50 : 20;
            return cmd_verify(suite, qmax, dmax, mmax);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const cubezeta::ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
