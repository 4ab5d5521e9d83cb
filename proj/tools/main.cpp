// Command-line front end: verify construction documents, run the census,
// evaluate fiber defects.

#include "isoprod/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace isoprod;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;   // validation failure, schema error, bad flags
constexpr int kExitMismatch = 3;  // expected block did not match
constexpr int kExitIo = 4;

std::string show(const Element& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.residues.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(e.residues[i]);
    }
    return s + ")";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad())
        throw std::ios_base::failure("cannot read " + path);
    return out.str();
}

/* ---------------------------------------------------------------- */
/*  verify                                                           */
/* ---------------------------------------------------------------- */

struct VerifyOutcome {
    json report;
    std::vector<std::string> lines;
    std::vector<std::string> mismatches;
    bool ok = false;
};

void check_expected(const io::ExpectedBlock& want, const SurfaceRecord& rec, long long h2,
                    const std::vector<long long>& defects, std::optional<long long> ledger,
                    std::optional<bool> extended, std::vector<std::string>& mismatches) {
    auto check = [&](const char* name, const std::optional<long long>& expect, long long got) {
        if (expect && *expect != got)
            mismatches.push_back(std::string(name) + ": expected " + std::to_string(*expect) +
                                 ", got " + std::to_string(got));
    };
    check("g_c", want.g_c, rec.g_c);
    check("g_d", want.g_d, rec.g_d);
    check("q", want.q, rec.q);
    check("chi", want.chi, rec.chi);
    check("k2", want.k2, rec.k2);
    check("pg", want.pg, rec.pg);
    check("e", want.e, rec.e);
    check("b2", want.b2, rec.b2);
    check("h2", want.h2, h2);
    check("kernel_order", want.kernel_order, rec.trivial_kernel.order());
    if (want.albanese_fiber_genus) {
        if (!rec.albanese_fiber_genus)
            mismatches.push_back("albanese_fiber_genus: expected " +
                                 std::to_string(*want.albanese_fiber_genus) + ", got none");
        else
            check("albanese_fiber_genus", want.albanese_fiber_genus, *rec.albanese_fiber_genus);
    }
    if (want.kernel_type && *want.kernel_type != rec.trivial_kernel_type.invariant_factors())
        mismatches.push_back("kernel_type: expected " + AbelianGroup(*want.kernel_type).name() +
                             ", got " + rec.trivial_kernel_type.name());
    if (want.kernel_elements && *want.kernel_elements != rec.trivial_kernel.elements())
        mismatches.push_back("kernel_elements differ");
    if (want.fiber_defects && *want.fiber_defects != defects)
        mismatches.push_back("fiber_defects differ");
    if (want.euler_ledger) {
        if (!ledger)
            mismatches.push_back("euler_ledger expected but the pair has q != 1");
        else
            check("euler_ledger", want.euler_ledger, *ledger);
    }
    if (want.extended_trivial) {
        if (!extended)
            mismatches.push_back("extended_trivial expected but no eigen_table present");
        else if (*want.extended_trivial != *extended)
            mismatches.push_back(std::string("extended_trivial: expected ") +
                                 (*want.extended_trivial ? "true" : "false") + ", got " +
                                 (*extended ? "true" : "false"));
    }
}

int cmd_verify(const std::string& path, bool as_json, bool check_expected_flag) {
    io::ConstructionDocument doc = io::document_from_text(read_file(path));

    VerifyOutcome out;
    out.report["group"] = io::group_json(doc.group);
    out.lines.push_back("group: " + doc.group.name() + " (order " +
                        std::to_string(doc.group.order()) + ")");

    auto report_cover = [&](const char* tag, const CoverDatum& d) {
        ValidationReport v = validate(d);
        json jc = io::cover_json(d);
        jc["valid"] = v.ok();
        std::string line = std::string("cover ") + tag + ": base genus " +
                           std::to_string(d.base_genus()) + ", " +
                           std::to_string(d.branch_count()) + " branch points";
        if (v.ok()) {
            long long g = total_genus(d);
            jc["genus"] = g;
            line += " -> genus " + std::to_string(g) + " [ok]";
        } else {
            json viols = json::array();
            for (CoverViolation viol : v.violations) {
                viols.push_back(describe(viol));
                line += " [" + describe(viol) + "]";
            }
            jc["violations"] = viols;
        }
        out.report[std::string("cover_") + tag] = jc;
        out.lines.push_back(line);
        return v.ok();
    };
    bool ok_c = report_cover("c", doc.cover_c);
    bool ok_d = report_cover("d", doc.cover_d);
    if (!ok_c || !ok_d) {
        out.report["valid"] = false;
        out.lines.push_back("validation: FAILED");
        goto print_invalid;
    }
    {
        if (total_genus(doc.cover_c) < 2 || total_genus(doc.cover_d) < 2) {
            out.report["valid"] = false;
            out.lines.push_back("validation: FAILED (a curve has genus < 2)");
            goto print_invalid;
        }
        ProductQuotient s(doc.cover_c, doc.cover_d);
        FreenessResult fr = is_free(s);
        out.report["valid"] = true;
        out.report["free"] = fr.free;
        if (!fr.free) {
            out.lines.push_back("freeness: FAILED, witness " + show(*fr.witness) +
                                " has fixed points on both curves");
            out.report["witness"] = io::element_json(*fr.witness);
            goto print_invalid;
        }
        out.lines.push_back("freeness: free");

        SurfaceRecord rec = invariants(s);
        long long h2 = h2_dimension(s);
        out.report["record"] = io::record_json(rec);
        out.report["h2"] = h2;
        out.lines.push_back("invariants: q=" + std::to_string(rec.q) +
                            " chi=" + std::to_string(rec.chi) + " K^2=" + std::to_string(rec.k2) +
                            " p_g=" + std::to_string(rec.pg) + " e=" + std::to_string(rec.e) +
                            " b2=" + std::to_string(rec.b2));
        out.lines.push_back("kunneth h2: " + std::to_string(h2) +
                            (h2 == rec.b2 ? " [matches b2]" : " [MISMATCH with b2]"));
        std::string kernel_line = "trivial kernel: order " +
                                  std::to_string(rec.trivial_kernel.order()) + ", type " +
                                  rec.trivial_kernel_type.name() + ", elements {";
        for (size_t i = 0; i < rec.trivial_kernel.elements().size(); ++i) {
            if (i)
                kernel_line += ", ";
            kernel_line += show(rec.trivial_kernel.elements()[i]);
        }
        out.lines.push_back(kernel_line + "}");

        std::vector<long long> defects;
        std::optional<long long> ledger;
        if (rec.q == 1) {
            out.lines.push_back("albanese fiber genus: " +
                                std::to_string(*rec.albanese_fiber_genus));
            std::vector<FiberModel> fibers = singular_fibers(s);
            json jf = json::array();
            for (const FiberModel& f : fibers) {
                DefectReport r = defect(f, *rec.albanese_fiber_genus);
                const auto& m = std::get<MultipleOfSmooth>(f);
                defects.push_back(r.delta);
                jf.push_back(json{{"m", m.multiplicity},
                                  {"component_genus", m.component_genus},
                                  {"delta", r.delta},
                                  {"class", tag(r.classification)}});
                out.lines.push_back("singular fiber: " + std::to_string(m.multiplicity) +
                                    " x (smooth genus " + std::to_string(m.component_genus) +
                                    "), delta=" + std::to_string(r.delta) + ", class " +
                                    tag(r.classification));
            }
            ledger = euler_ledger(fibers, *rec.albanese_fiber_genus, 1);
            out.report["fibers"] = jf;
            out.report["euler_ledger"] = *ledger;
            out.lines.push_back("euler ledger: " + std::to_string(*ledger) + " = 4*chi " +
                                (*ledger == 4 * rec.chi ? "[ok]" : "[MISMATCH]"));
        }

        std::optional<bool> extended;
        if (doc.eigen_table) {
            extended = extended_triviality(s, *doc.eigen_table);
            out.report["extended_trivial"] = *extended;
            out.lines.push_back(std::string("extended automorphism acts trivially: ") +
                                (*extended ? "true" : "false"));
            out.lines.push_back("diagonal kernel order " +
                                std::to_string(rec.trivial_kernel.order()));
        }

        if (check_expected_flag && doc.expected) {
            check_expected(*doc.expected, rec, h2, defects, ledger, extended, out.mismatches);
            out.report["expected_ok"] = out.mismatches.empty();
            if (out.mismatches.empty()) {
                out.lines.push_back("expected block: all fields match");
            } else {
                json jm = json::array();
                for (const std::string& m : out.mismatches) {
                    out.lines.push_back("expected MISMATCH " + m);
                    jm.push_back(m);
                }
                out.report["mismatches"] = jm;
            }
        }
        out.ok = true;
    }

print_invalid:
    if (as_json) {
        std::cout << out.report.dump(2) << "\n";
    } else {
        for (const std::string& line : out.lines)
            std::cout << line << "\n";
    }
    if (!out.ok)
        return kExitInvalid;
    return out.mismatches.empty() ? kExitOk : kExitMismatch;
}

/* ---------------------------------------------------------------- */
/*  enumerate                                                        */
/* ---------------------------------------------------------------- */

int cmd_enumerate(const std::string& groups_flag, int q, int max_branch, long long max_chi,
                  const std::string& out_path, int threads) {
    SearchParams params;
    params.max_branch_points = max_branch;
    params.max_chi = max_chi;
    if (q == 0)
        params.base_split = {0, 0};
    else if (q == 1)
        params.base_split = {1, 0};
    else if (q == 2)
        params.base_split = {1, 1};
    else
        throw std::invalid_argument("--q must be 0, 1 or 2");
    if (!groups_flag.empty()) {
        std::stringstream ss(groups_flag);
        std::string token;
        while (std::getline(ss, token, ','))
            params.groups.push_back(io::parse_group_shorthand(token));
    }

    std::vector<CensusEntry> census = run_census(params, threads);

    std::ofstream file;
    std::ostream* stream = &std::cout;
    std::ostream* summary = &std::cerr;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file)
            throw std::ios_base::failure("cannot open " + out_path);
        stream = &file;
        summary = &std::cout;
    }
    for (const CensusEntry& entry : census)
        *stream << io::census_entry_line(entry) << "\n";
    if (file.is_open() && !file.good())
        throw std::ios_base::failure("cannot write " + out_path);

    // summary per (kernel type, fiber genus) class
    std::map<std::pair<std::string, long long>, long long> classes;
    long long anomalies = 0;
    for (const CensusEntry& entry : census) {
        if (!entry.record)
            continue;
        long long fiber_genus =
            entry.record->albanese_fiber_genus ? *entry.record->albanese_fiber_genus : -1;
        ++classes[{entry.kernel_type.name(), fiber_genus}];
        if (entry.anomaly)
            ++anomalies;
    }
    for (const auto& [key, count] : classes) {
        *summary << "class kernel=" << key.first;
        if (key.second >= 0)
            *summary << " fiber_genus=" << key.second;
        *summary << " count=" << count << "\n";
    }
    *summary << "total entries=" << census.size() << " anomalies=" << anomalies << "\n";
    return anomalies == 0 ? kExitOk : kExitInvalid;
}

/* ---------------------------------------------------------------- */
/*  defect                                                           */
/* ---------------------------------------------------------------- */

int cmd_defect(const std::string& input, long long genus, std::optional<long long> base_genus) {
    std::string text = !input.empty() && input[0] == '{' ? input
                       : !input.empty() && input[0] == '[' ? input
                                                           : read_file(input);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& err) {
        throw io::SchemaError(std::string("not valid JSON: ") + err.what());
    }
    const json* list = nullptr;
    if (j.is_array()) {
        list = &j;
    } else if (j.is_object() && j.contains("fibers")) {
        if (j.contains("schema") && j["schema"].get<long long>() != io::kSchemaVersion)
            throw io::SchemaError("unsupported schema version");
        list = &j["fibers"];
    } else {
        throw io::SchemaError("fiber document must be an array or {\"fibers\": [...]}");
    }

    std::vector<FiberModel> fibers;
    for (const json& f : *list)
        fibers.push_back(io::fiber_from(f, genus));

    long long total = 0;
    for (size_t i = 0; i < fibers.size(); ++i) {
        DefectReport r = defect(fibers[i], genus);
        total += r.delta;
        std::cout << "fiber " << i + 1 << ": e=" << r.euler << " p_a=" << r.arithmetic_genus
                  << " delta=" << r.delta << " class=" << tag(r.classification)
                  << (r.asserted ? " (asserted, unchecked)" : "") << "\n";
    }
    std::cout << "defect total: " << total << "\n";
    if (base_genus) {
        long long e = euler_ledger(fibers, genus, *base_genus);
        std::cout << "euler ledger: e(S) = " << e << " (fiber genus " << genus << ", base genus "
                  << *base_genus << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for product-quotient surfaces"};
    app.require_subcommand(1);

    std::string verify_path;
    bool verify_json = false, verify_expected = false;
    CLI::App* verify = app.add_subcommand("verify", "verify a construction document");
    verify->add_option("file", verify_path, "construction document (JSON)")->required();
    verify->add_flag("--json", verify_json, "emit a JSON report");
    verify->add_flag("--check-expected", verify_expected,
                     "compare against the document's expected block");
    verify->add_flag("--table", [](int64_t) {}, "table output (default)");

    std::string groups_flag, out_path;
    int q = 1, max_branch = 8, threads = 1;
    long long max_chi = 4;
    CLI::App* enumerate = app.add_subcommand("enumerate", "run the bounded census");
    enumerate->add_option("--groups", groups_flag,
                          "comma-separated group shorthands, e.g. Z2^3,Z2xZ4 (default: all "
                          "abelian groups of order <= 8)");
    enumerate->add_option("--q", q, "irregularity (0, 1 or 2; default 1)");
    enumerate->add_option("--max-branch", max_branch, "max branch points per cover (default 8)");
    enumerate->add_option("--max-chi", max_chi, "max chi(O_S) (default 4)");
    enumerate->add_option("--out", out_path, "write the census stream to a file");
    enumerate->add_option("--threads", threads, "parallel evaluation threads (default 1)");

    std::string defect_input;
    long long genus = 0;
    long long base_genus_value = -1;
    CLI::App* defect_cmd = app.add_subcommand("defect", "evaluate fiber defects");
    defect_cmd->add_option("fibers", defect_input, "fiber document path or inline JSON")
        ->required();
    defect_cmd->add_option("--genus", genus, "fibration genus")->required();
    defect_cmd->add_option("--base-genus", base_genus_value, "base curve genus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (verify->parsed())
            return cmd_verify(verify_path, verify_json, verify_expected);
        if (enumerate->parsed())
            return cmd_enumerate(groups_flag, q, max_branch, max_chi, out_path, threads);
        if (defect_cmd->parsed()) {
            std::optional<long long> base;
            if (base_genus_value >= 0)
                base = base_genus_value;
            return cmd_defect(defect_input, genus, base);
        }
    } catch (const std::ios_base::failure& err) {
        std::cerr << "io error: " << err.what() << "\n";
        return kExitIo;
    } catch (const io::SchemaError& err) {
        std::cerr << "schema error: " << err.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 1;
    }
    return kExitInvalid;
}
