#include "ternary/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ternary/factorization.hpp"
#include "ternary/lattice.hpp"
#include "ternary/primality.hpp"
#include "ternary/sieve.hpp"
#include "ternary/svg.hpp"

namespace ternary::cli {
namespace {

using nlohmann::json;

// Largest n range `table` accepts in one call.
constexpr Natural kMaxTableSpan = 10'000'000;

struct RunConfig {
    OutputFormat format = OutputFormat::Human;
    bool augmented = false;
    unsigned threads = 1;
    std::string output_path;
    SvgStyle style;
};

/// Streams records in the selected format. Human output is either
/// space-separated words on one line or one line per record.
class Sink {
public:
    enum class HumanLayout { Words, Lines };

    Sink(OutputFormat format, std::ostream& os, HumanLayout layout = HumanLayout::Words)
        : format_(format), os_(os), layout_(layout)
    {
    }

    void header(const std::vector<std::string>& columns)
    {
        if (format_ == OutputFormat::Csv)
            write_csv(columns);
    }

    void row(const json& object, const std::vector<std::string>& csv, const std::string& human)
    {
        switch (format_) {
        case OutputFormat::Json: os_ << object.dump() << '\n'; break;
        case OutputFormat::Csv: write_csv(csv); break;
        case OutputFormat::Human:
            if (layout_ == HumanLayout::Lines)
                os_ << human << '\n';
            else
                os_ << (first_ ? "" : " ") << human;
            break;
        }
        first_ = false;
        os_.flush();
    }

    void finish()
    {
        if (format_ == OutputFormat::Human && layout_ == HumanLayout::Words)
            os_ << '\n';
    }

private:
    void write_csv(const std::vector<std::string>& fields)
    {
        for (std::size_t i = 0; i < fields.size(); ++i)
            os_ << (i ? "," : "") << fields[i];
        os_ << '\n';
    }

    OutputFormat format_;
    std::ostream& os_;
    HumanLayout layout_;
    bool first_ = true;
};

std::string str(Natural n) { return std::to_string(n); }

std::string factor_string(const std::map<Natural, Natural>& factors)
{
    std::string s;
    for (const auto& [p, e] : factors) {
        if (!s.empty())
            s += " * ";
        s += str(p);
        if (e > 1)
            s += "^" + str(e);
    }
    return s;
}

void cmd_product(const RunConfig& cfg, std::ostream& os, Natural x, Natural y, Natural z)
{
    const Triple t = canonicalize(x, y, z);
    const Natural sym = product_symmetric(t), strip = product_strip(t), incl = product_inclusion(t);
    const Natural value = product(t);

    Sink sink(cfg.format, os, Sink::HumanLayout::Lines);
    sink.header({"x", "y", "z", "symmetric", "strip", "inclusion", "product"});
    json j{{"command", "product"}, {"x", x},       {"y", y},         {"z", z},
           {"symmetric", sym},     {"strip", strip}, {"inclusion", incl}, {"product", value}};
    std::ostringstream human;
    human << "<" << x << "," << y << "," << z << "> = " << value << "\n"
          << "  symmetric  " << sym << "\n"
          << "  strip      " << strip << "\n"
          << "  inclusion  " << incl;
    sink.row(j, {str(x), str(y), str(z), str(sym), str(strip), str(incl), str(value)}, human.str());
}

void cmd_sieve3(const RunConfig& cfg, std::ostream& os, Natural limit, bool direct)
{
    Sink sink(cfg.format, os);
    sink.header({"value"});
    auto emit = [&](Natural v) {
        sink.row({{"command", "sieve3"}, {"limit", limit}, {"value", v}}, {str(v)}, str(v));
    };

    if (direct) {
        if (limit < 2)
            throw DomainError("sieve limit must be at least 2");
        for (Natural n = 1; n <= limit; ++n) {
            if (is_3prime_direct(n, Convention{cfg.augmented}))
                emit(n);
        }
    } else {
        SieveOptions options;
        options.threads = cfg.threads;
        const SieveTable table = ternary_sieve(limit, options);
        if (cfg.augmented)
            emit(1);
        table.for_each_survivor(emit);
    }
    sink.finish();
}

void cmd_factor3(const RunConfig& cfg, std::ostream& os, Natural n)
{
    Sink sink(cfg.format, os);
    sink.header({"n", "x", "y", "z"});
    for (const Triple& t : enumerate_3factorizations(n).triples) {
        sink.row({{"command", "factor3"}, {"n", n}, {"triple", {t.x(), t.y(), t.z()}}},
                 {str(n), str(t.x()), str(t.y()), str(t.z())}, t.to_string());
    }
    sink.finish();
}

void cmd_table(const RunConfig& cfg, std::ostream& os, Natural from, Natural to)
{
    if (from < 1 || to < from)
        throw DomainError("table range must satisfy 1 <= a <= b");
    if (to - from >= kMaxTableSpan)
        throw LimitError("table range wider than " + str(kMaxTableSpan));
    Sink sink(cfg.format, os);
    sink.header({"n", "count"});
    for (Natural n = from;; ++n) {
        const Natural c = count_3factorizations(n);
        sink.row({{"command", "table"}, {"n", n}, {"count", c}}, {str(n), str(c)}, str(c));
        if (n == to)
            break;
    }
    sink.finish();
}

void cmd_factor2(const RunConfig& cfg, std::ostream& os, Natural n)
{
    const FactorizationReport r = factor2_full(n);
    const bool prime = r.is_prime();

    json factors = json::array();
    for (const auto& [p, e] : r.factors)
        factors.push_back({{"prime", p}, {"exponent", e}});
    json j{{"command", "factor2"}, {"n", n}, {"prime", prime}, {"factors", factors},
           {"divisor", nullptr},   {"cofactor", nullptr}, {"repetition", nullptr},
           {"gcd_difference", nullptr}, {"gcd_sum", nullptr}};
    std::vector<std::string> csv{str(n), prime ? "true" : "false", "", "", "", "", "", "", ""};
    std::ostringstream human;

    if (prime) {
        human << n << " is 2-prime";
    } else {
        j["divisor"] = *r.divisor;
        j["cofactor"] = *r.cofactor;
        csv[2] = str(*r.divisor);
        csv[3] = str(*r.cofactor);
        if (r.witness) {
            const auto& w = *r.witness;
            j["repetition"] = {w.repetition.k, w.repetition.l};
            j["gcd_difference"] = w.gcd_difference;
            j["gcd_sum"] = w.gcd_sum;
            csv[4] = str(w.repetition.k);
            csv[5] = str(w.repetition.l);
            csv[6] = str(w.gcd_difference);
            csv[7] = str(w.gcd_sum);
            human << "repetition (k,l) = (" << w.repetition.k << "," << w.repetition.l << ")\n"
                  << "gcd(l-k, n) = " << w.gcd_difference << ", gcd(l+k+1, n) = " << w.gcd_sum << "\n";
        }
        human << "divisor " << *r.divisor << ", cofactor " << *r.cofactor << "\n"
              << n << " = " << factor_string(r.factors);
    }
    std::string csv_factors;
    for (const auto& [p, e] : r.factors)
        csv_factors += (csv_factors.empty() ? "" : "*") + str(p) + (e > 1 ? "^" + str(e) : "");
    csv[8] = csv_factors;

    Sink sink(cfg.format, os, Sink::HumanLayout::Lines);
    sink.header({"n", "prime", "divisor", "cofactor", "k", "l", "gcd_difference", "gcd_sum", "factors"});
    sink.row(j, csv, human.str());
}

void cmd_hexsvg(const RunConfig& cfg, std::ostream& os, Natural a, Natural b, Natural c, const std::string& path)
{
    const Hexagon h = Hexagon::from_sides(a, b, c);
    const Natural points = discrete_volume(h);
    const SvgDocument doc = render_svg(h, cfg.style);

    if (path == "-") {
        os << doc.text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + path + " for writing");
    file << doc.text;
    if (!file.flush())
        throw std::runtime_error("failed writing " + path);

    Sink sink(cfg.format, os, Sink::HumanLayout::Lines);
    sink.header({"a", "b", "c", "points", "path"});
    sink.row({{"command", "hexsvg"}, {"sides", {a, b, c}}, {"points", points}, {"path", path}},
             {str(a), str(b), str(c), str(points), path}, "wrote " + path + " (" + str(points) + " points)");
}

void cmd_lucky(const RunConfig& cfg, std::ostream& os, Natural limit)
{
    if (limit < 1)
        throw DomainError("limit must be at least 1");
    Sink sink(cfg.format, os);
    sink.header({"value"});
    for (Natural p = 1; p <= limit; ++p) {
        if (euler_lucky_check(p))
            sink.row({{"command", "lucky"}, {"limit", limit}, {"value", p}}, {str(p)}, str(p));
    }
    sink.finish();
}

void cmd_rabinowitsch(const RunConfig& cfg, std::ostream& os, Natural limit)
{
    if (limit < 1 || limit > Natural{1} << 40)
        throw DomainError("limit must be in [1, 2^40]");
    Sink sink(cfg.format, os);
    sink.header({"discriminant"});
    for (std::int64_t d : rabinowitsch_discriminants(static_cast<std::int64_t>(limit))) {
        sink.row({{"command", "rabinowitsch"}, {"limit", limit}, {"discriminant", d}}, {std::to_string(d)},
                 std::to_string(d));
    }
    sink.finish();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ternary multiplication, 3-primes and the triangular-number factoring method", "ternary"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::map<std::string, OutputFormat> formats{
        {"human", OutputFormat::Human}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_flag("--augmented", cfg.augmented, "Count 1 as a 3-prime");
    app.add_option("--threads", cfg.threads, "Sieve worker threads")->check(CLI::Range(1U, 256U));
    app.add_option("-o,--output", cfg.output_path, "Write the report to a file instead of stdout");
    app.fallthrough();

    Natural x = 0, y = 0, z = 0;
    auto* product_cmd = app.add_subcommand("product", "Ternary product <x,y,z> by all three formulas");
    product_cmd->add_option("x", x)->required();
    product_cmd->add_option("y", y)->required();
    product_cmd->add_option("z", z)->required();

    Natural limit = 0;
    bool direct = false;
    auto* sieve_cmd = app.add_subcommand("sieve3", "3-primes up to N via the ternary sieve");
    sieve_cmd->add_option("N", limit)->required();
    sieve_cmd->add_flag("--direct", direct, "Test each n by corner completion instead of sieving");

    Natural n = 0;
    auto* factor3_cmd = app.add_subcommand("factor3", "All 3-factorizations of n");
    factor3_cmd->add_option("n", n)->required();

    Natural from = 0, to = 0;
    auto* table_cmd = app.add_subcommand("table", "Number of 3-factorizations for n in [a, b]");
    table_cmd->add_option("a", from)->required();
    table_cmd->add_option("b", to)->required();

    auto* factor2_cmd = app.add_subcommand("factor2", "2-factorization by congruence trace and gcd");
    factor2_cmd->add_option("n", n)->required();

    std::string svg_path;
    auto* hexsvg_cmd = app.add_subcommand("hexsvg", "Write the lattice hexagon <a,b,c> as SVG");
    hexsvg_cmd->add_option("a", x)->required();
    hexsvg_cmd->add_option("b", y)->required();
    hexsvg_cmd->add_option("c", z)->required();
    hexsvg_cmd->add_option("path", svg_path, "Output file, or - for stdout")->required();
    hexsvg_cmd->add_option("--spacing", cfg.style.spacing, "Pixels per lattice step")->check(CLI::PositiveNumber);
    hexsvg_cmd->add_option("--radius", cfg.style.point_radius, "Point marker radius")->check(CLI::PositiveNumber);
    hexsvg_cmd->add_option("--margin", cfg.style.margin, "Lattice steps around the region")
        ->check(CLI::Range(0, 20));
    hexsvg_cmd->add_option("--point-fill", cfg.style.point_fill);
    hexsvg_cmd->add_option("--region-fill", cfg.style.region_fill);

    auto* lucky_cmd = app.add_subcommand("lucky", "Augmented Euler lucky numbers up to a limit");
    lucky_cmd->add_option("limit", limit)->required();

    auto* rab_cmd = app.add_subcommand("rabinowitsch", "Odd discriminants -limit < D < 0 passing Rabinowitsch");
    rab_cmd->add_option("limit", limit)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << '\n';
        return 2;
    }

    try {
        std::unique_ptr<std::ofstream> file;
        std::ostream* os = &out;
        if (!cfg.output_path.empty()) {
            file = std::make_unique<std::ofstream>(cfg.output_path, std::ios::binary);
            if (!*file)
                throw std::runtime_error("cannot open " + cfg.output_path + " for writing");
            os = file.get();
        }

        if (product_cmd->parsed())
            cmd_product(cfg, *os, x, y, z);
        else if (sieve_cmd->parsed())
            cmd_sieve3(cfg, *os, limit, direct);
        else if (factor3_cmd->parsed())
            cmd_factor3(cfg, *os, n);
        else if (table_cmd->parsed())
            cmd_table(cfg, *os, from, to);
        else if (factor2_cmd->parsed())
            cmd_factor2(cfg, *os, n);
        else if (hexsvg_cmd->parsed())
            cmd_hexsvg(cfg, *os, x, y, z, svg_path);
        else if (lucky_cmd->parsed())
            cmd_lucky(cfg, *os, limit);
        else if (rab_cmd->parsed())
            cmd_rabinowitsch(cfg, *os, limit);

        if (file && !file->flush())
            throw std::runtime_error("failed writing " + cfg.output_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace ternary::cli
