#include "hamlie/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "hamlie/bialgebra.hpp"
#include "hamlie/errors.hpp"
#include "hamlie/json_io.hpp"
#include "hamlie/sampling.hpp"
#include "hamlie/verify.hpp"

namespace hamlie::cli {

namespace {

/// Thrown for input problems that are not already typed library errors.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Operand {
    std::string origin;
    Document doc;
};

std::vector<Operand> load_operands(const JobSpec& job)
{
    std::vector<Operand> ops;
    auto load = [&](const std::string& origin, const std::string& text) {
        try {
            ops.push_back({origin, parse_document(text)});
        } catch (const ParseError& e) {
            throw ParseError(origin + (e.location().empty() ? "" : ":" + e.location()),
                             std::string(e.what()).substr(e.location().empty() ? 0 : e.location().size() + 2));
        }
    };
    for (const auto& path : job.inputs) {
        load(path, read_file(path));
    }
    for (std::size_t i = 0; i < job.inlines.size(); ++i) {
        load("inline[" + std::to_string(i) + "]", job.inlines[i]);
    }
    const std::size_t n = job.n ? *job.n : (ops.empty() ? 0 : ambient_n(ops.front().doc));
    for (const auto& op : ops) {
        if (ambient_n(op.doc) != n) {
            throw DimensionError(op.origin + ": ambient n=" + std::to_string(ambient_n(op.doc)) + ", expected n="
                                 + std::to_string(n));
        }
    }
    return ops;
}

void require_count(const std::vector<Operand>& ops, std::size_t count, const std::string& command)
{
    if (ops.size() != count) {
        throw InputError(command + " takes " + std::to_string(count) + " operand(s), got "
                         + std::to_string(ops.size()));
    }
}

const BarElement& as_element(const Operand& op)
{
    if (const auto* u = std::get_if<BarElement>(&op.doc)) {
        return *u;
    }
    throw InputError(op.origin + ": expected an element, got a tensor");
}

HElement as_h_element(const Operand& op)
{
    const BarElement& u = as_element(op);
    if (u.coefficient(Exponent::zero(u.n())) != 0) {
        throw ParseError(op.origin, "the term t^0 is not an element of H");
    }
    return project_to_H(u);
}

const TensorElement& as_tensor_operand(const Operand& op, std::optional<std::size_t> arity = std::nullopt)
{
    const auto* v = std::get_if<TensorElement>(&op.doc);
    if (!v) {
        throw InputError(op.origin + ": expected a tensor, got an element");
    }
    if (arity && v->arity() != *arity) {
        throw ArityError(op.origin + ": expected arity " + std::to_string(*arity) + ", got "
                         + std::to_string(v->arity()));
    }
    return *v;
}

Json header(const JobSpec& job)
{
    Json j;
    j["command"] = job.command;
    return j;
}

struct Outcome {
    Json report;
    int code;
};

Outcome run_bracket(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 2, job.command);
    Json j = header(job);
    j["result"] = to_json(bracket(as_h_element(ops[0]), as_h_element(ops[1])));
    return {j, kSuccess};
}

Outcome run_product(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 2, job.command);
    Json j = header(job);
    j["result"] = to_json(product(as_element(ops[0]), as_element(ops[1])));
    return {j, kSuccess};
}

Outcome run_cobracket(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 2, job.command);
    const RMatrix r = RMatrix::skew(as_tensor_operand(ops[0], 2));
    Json j = header(job);
    j["result"] = to_json(cobracket(r, as_h_element(ops[1])));
    return {j, kSuccess};
}

Outcome run_cybe(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 1, job.command);
    const TensorElement c = cybe(as_tensor_operand(ops[0], 2));
    Json j = header(job);
    j["zero"] = c.is_zero();
    j["result"] = to_json(c);
    return {j, c.is_zero() ? kSuccess : kCheckFailed};
}

CheckReport sweep(const std::string& name, const std::vector<HElement>& xs,
                  const std::function<TensorElement(const HElement&)>& defect_of)
{
    for (const auto& x : xs) {
        TensorElement d = defect_of(x);
        if (!d.is_zero()) {
            return CheckReport{false, std::move(d), x, name + " fails at the reported witness"};
        }
    }
    return CheckReport{true, std::nullopt, std::nullopt,
                       name + " defect vanishes on " + std::to_string(xs.size()) + " samples"};
}

Outcome run_check_bialgebra(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 1, job.command);
    const RMatrix r = RMatrix::skew(as_tensor_operand(ops[0], 2));
    const std::size_t n = r.n();
    Sampler sampler(job.seed);
    std::vector<HElement> xs;
    std::vector<HElement> ys;
    for (std::size_t i = 0; i < job.samples; ++i) {
        xs.push_back(sampler.element(n, 3));
        ys.push_back(sampler.element(n, 3));
    }

    std::vector<CheckReport> reports;
    reports.push_back(sweep("anti-commutativity", xs, [&](const HElement& x) { return anti_commutativity_defect(r, x); }));
    reports.push_back(sweep("co-Jacobi", xs, [&](const HElement& x) { return co_jacobi_defect(r, x); }));
    {
        CheckReport rep{true, std::nullopt, std::nullopt, ""};
        for (std::size_t i = 0; i < xs.size() && rep.passed; ++i) {
            TensorElement d = compatibility_defect(r, xs[i], ys[i]);
            if (!d.is_zero()) {
                rep = CheckReport{false, std::move(d), xs[i], "compatibility fails at the reported witness x"};
            }
        }
        if (rep.passed) {
            rep.description = "compatibility defect vanishes on " + std::to_string(xs.size()) + " sample pairs";
        }
        reports.push_back(std::move(rep));
    }
    reports.push_back(sweep("Drinfeld identity", xs, [&](const HElement& x) { return drinfeld_identity_defect(r, x); }));

    bool all = true;
    Json checks = Json::array();
    for (const auto& rep : reports) {
        all = all && rep.passed;
        checks.push_back(to_json(rep));
    }
    Json j = header(job);
    j["seed"] = job.seed;
    j["samples"] = job.samples;
    j["cybe_zero"] = cybe(r.value()).is_zero();
    j["passed"] = all;
    j["checks"] = std::move(checks);
    return {j, all ? kSuccess : kCheckFailed};
}

Outcome run_triangular(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 2, job.command);
    const HElement a = as_h_element(ops[0]);
    const HElement b = as_h_element(ops[1]);
    Json j = header(job);
    try {
        const RMatrix r = triangular_from_pair(a, b);
        j["r"] = to_json(r.value());
        j["report"] = to_json(CheckReport{true, cybe(r.value()), std::nullopt,
                                          "[a,b] = b; r is skew and c(r) = 0"});
        return {j, kSuccess};
    } catch (const PairConstraintError& e) {
        j["r"] = nullptr;
        j["report"] = to_json(CheckReport{false, as_tensor(e.defect()), std::nullopt, "[a,b] != b; defect is [a,b] - b"});
        return {j, kCheckFailed};
    }
}

Outcome run_witness(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 1, job.command);
    const TensorElement c = job.of_cybe ? cybe(as_tensor_operand(ops[0], 2)) : as_tensor_operand(ops[0]);
    const long bound = job.bound ? *job.bound : default_bound(c);
    const auto w = c.arity() == 3 ? ad_invariance_witness(c, bound) : annihilator_witness(c, bound);
    Json j = header(job);
    j["K"] = bound;
    j["witness"] = w ? to_json(*w) : Json(nullptr);
    j["description"] = w ? "tensor is not annihilated by the witness" : "no witness up to K";
    return {j, w ? kCheckFailed : kSuccess};
}

Outcome run_lemma23(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 1, job.command);
    if (!job.p) {
        throw InputError("lemma23 needs --p");
    }
    const TensorElement& v = as_tensor_operand(ops[0], 2);
    const long bound = job.bound ? *job.bound : default_bound(v);
    const CheckReport rep = lemma23_harness(v, *job.p, bound);
    Json j = header(job);
    j["p"] = *job.p;
    j["K"] = bound;
    j["report"] = to_json(rep);
    return {j, rep.passed ? kSuccess : kCheckFailed};
}

Outcome run_skew_closure(const JobSpec& job, const std::vector<Operand>& ops)
{
    require_count(ops, 1, job.command);
    const TensorElement& r = as_tensor_operand(ops[0], 2);
    const long bound = job.bound ? *job.bound : default_bound(r);
    Sampler sampler(job.seed);
    std::vector<HElement> sample;
    for (std::size_t i = 0; i < job.samples; ++i) {
        sample.push_back(sampler.element(r.n(), 3));
    }
    const CheckReport rep = skew_closure_harness(r, sample, bound);
    Json j = header(job);
    j["seed"] = job.seed;
    j["samples"] = job.samples;
    j["K"] = bound;
    j["report"] = to_json(rep);
    return {j, rep.passed ? kSuccess : kCheckFailed};
}

} // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err)
{
    using Handler = Outcome (*)(const JobSpec&, const std::vector<Operand>&);
    static const std::map<std::string, Handler> handlers = {
        {"bracket", run_bracket},       {"product", run_product}, {"cobracket", run_cobracket},
        {"cybe", run_cybe},             {"check-bialgebra", run_check_bialgebra},
        {"triangular", run_triangular}, {"witness", run_witness}, {"lemma23", run_lemma23},
        {"skew-closure", run_skew_closure},
    };

    Outcome outcome;
    const auto it = handlers.find(job.command);
    if (it == handlers.end()) {
        err << "unknown command '" << job.command << "'\n";
        return kInputError;
    }
    try {
        outcome = it->second(job, load_operands(job));
    } catch (const std::invalid_argument& e) {
        // DimensionError, ArityError, HomogeneityError
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ConstraintError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const std::string text = serialize(outcome.report);
    if (job.output.empty()) {
        out << text;
    } else {
        std::ofstream file(job.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << job.output << "'\n";
            return kInputError;
        }
        file << text;
    }
    return outcome.code;
}

int main(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations in Hamiltonian Lie algebras of Cartan type H", "hamlie"};
    app.require_subcommand(1);

    JobSpec job;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"bracket", "Lie bracket [x,y] in H"},
        {"product", "Poisson product u*v in Hbar"},
        {"cobracket", "coboundary cobracket Delta_r(x) = x . r"},
        {"cybe", "classical Yang-Baxter tensor c(r); exit 1 if nonzero"},
        {"check-bialgebra", "sample the Lie bialgebra axioms for Delta_r"},
        {"triangular", "r = a(x)b - b(x)a from [a,b] = b"},
        {"witness", "search for x with x . c != 0; exit 1 if found"},
        {"lemma23", "bounded V^p membership harness"},
        {"skew-closure", "bounded skew-closure harness"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--input,-i", job.inputs, "operand file (repeatable)");
        sub->add_option("--inline", job.inlines, "operand JSON text (repeatable, after files)");
        sub->add_option("--n", job.n, "required ambient n of every operand");
        sub->add_option("--p", job.p, "coordinate index 1..n");
        sub->add_option("--K", job.bound, "search bound K")->check(CLI::PositiveNumber);
        sub->add_option("--samples", job.samples, "random sample count");
        sub->add_option("--seed", job.seed, "random seed");
        sub->add_option("--output,-o", job.output, "write the report here instead of stdout");
        if (name == "witness") {
            sub->add_flag("--cybe", job.of_cybe, "operand is r; search on c(r)");
        }
        sub->callback([&job, name = name]() { job.command = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }
    return run(job, out, err);
}

} // namespace hamlie::cli
