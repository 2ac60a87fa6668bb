#include "cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "facering/charclass.hpp"
#include "facering/models.hpp"
#include "facering/oracle.hpp"

namespace facering::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Model resolve_model(const std::string& source, std::optional<std::uint64_t> characteristic) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    std::optional<Field> field;
    if (characteristic) field = Field::of_characteristic(*characteristic);
    try {
      return build_builtin(source.substr(prefix.size()), field);
    } catch (const UnknownModel& e) {
      throw UsageError(e.what());
    }
  }
  if (characteristic) throw UsageError("--field only applies to builtin models");
  return load_model(source);
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<Scalar> parse_u(const Field& k, const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(k.parse(item));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--u: ") + e.what());
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological face ring calculator", "facering"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string model_source;
  std::optional<std::uint64_t> characteristic;
  int max_degree = 0;
  std::string lhs, rhs, element, kind, u_text;
  bool want_decompose = false, want_oracle = false;

  auto with_model = [&](CLI::App* sub) {
    sub->add_option("--model", model_source, "builtin:<name> or path to a model JSON file")
        ->required();
    sub->add_option("--field", characteristic, "Override the field of a builtin (0 or a prime)");
    return sub;
  };

  auto* validate = with_model(app.add_subcommand("validate", "Check every face complex axiom"));
  auto* hilb = with_model(app.add_subcommand("hilbert", "Graded dimensions of the face ring"));
  hilb->add_option("--max-degree", max_degree)->required()->check(CLI::NonNegativeNumber);
  auto* mult = with_model(app.add_subcommand("multiply", "Multiply two ring elements"));
  mult->add_option("--lhs", lhs)->required();
  mult->add_option("--rhs", rhs)->required();
  mult->add_flag("--decompose", want_decompose, "Also print the face-element decomposition");
  auto* dec = with_model(app.add_subcommand("decompose", "Decompose an element into face elements"));
  dec->add_option("--element", element)->required();
  auto* mem = with_model(app.add_subcommand("member", "Test membership in the face ring"));
  mem->add_option("--element", element)->required();
  mem->add_flag("--oracle", want_oracle, "Cross-check with the linear-algebra oracle");
  auto* cc = with_model(app.add_subcommand("charclass", "Total equivariant characteristic class"));
  cc->add_option("--kind", kind)->required()->check(CLI::IsMember({"sw", "pontrjagin"}));
  auto* et = with_model(app.add_subcommand("eta", "Image of u in H^2(BT) in the face ring"));
  et->add_option("--u", u_text, "Comma-separated coefficients a1,...,an")->required();
  auto* csr = with_model(app.add_subcommand("compare-sr", "Compare Hilbert counts with the oracles"));
  csr->add_option("--max-degree", max_degree)->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    std::optional<Model> loaded;
    try {
      loaded.emplace(resolve_model(model_source, characteristic));
    } catch (const ValidationError& e) {
      // The report is the output of `validate`, so it goes to stdout.
      out << e.what();
      return kFailure;
    }
    const Model& model = *loaded;
    const FaceComplex& c = model.complex;

    if (*validate) {
      ComplexReport report = validate_complex(c);
      out << report.to_string(c);
      return report.ok() ? kOk : kFailure;
    }
    if (*hilb) {
      out << join(hilbert(c, max_degree)) << "\n";
      return kOk;
    }
    if (*mult) {
      RingElement product = multiply(c, load_element(c, lhs), load_element(c, rhs));
      out << to_string(c, product);
      if (want_decompose) {
        try {
          out << "decomposition:\n" << to_string(c, decompose(c, product));
        } catch (const NotInFaceRing& e) {
          out << "NOT MEMBER: " << e.what() << "\n";
        }
      }
      return kOk;
    }
    if (*dec) {
      RingElement a = load_element(c, element);
      try {
        out << to_string(c, decompose(c, a));
      } catch (const NotInFaceRing& e) {
        out << "NOT MEMBER: " << e.what() << "\n";
      }
      return kOk;
    }
    if (*mem) {
      RingElement a = load_element(c, element);
      bool fast = true;
      std::optional<FaceDecomposition> parts;
      try {
        parts = decompose(c, a);
      } catch (const NotInFaceRing&) {
        fast = false;
      }
      std::string verdict = fast ? "MEMBER" : "NOT MEMBER";
      if (!want_oracle) {
        out << verdict << "\n";
        return kOk;
      }
      Membership slow = naive_membership(c, a);
      bool agree = slow.member == fast && (!fast || to_decomposition(c, slow) == *parts);
      if (agree) {
        out << verdict << " (agrees with oracle)\n";
        return kOk;
      }
      out << verdict << " (DISAGREES with oracle: " << (slow.member ? "member" : "non-member")
          << ")\n";
      return kFailure;
    }
    if (*cc) {
      if (!model.chars) throw Error("model has no char_data");
      RingElement total = kind == "sw" ? sw_total(c, *model.chars) : pontrjagin_total(c, *model.chars);
      out << to_string(c, decompose(c, total));
      return kOk;
    }
    if (*et) {
      if (!model.torus) throw Error("model has no torus_data");
      std::vector<Scalar> u = parse_u(c.field(), u_text);
      out << to_string(c, eta(c, *model.torus, u));
      return kOk;
    }
    if (*csr) {
      auto fast = hilbert(c, max_degree);
      auto brute = brute_basis_hilbert(c, max_degree);
      out << "hilbert: " << join(fast) << "\n";
      out << "brute:   " << join(brute.dims) << "\n";
      std::vector<std::uint64_t> sr;
      try {
        sr = sr_hilbert(c, max_degree);
      } catch (const Error& e) {
        out << "sr:      not applicable (" << e.what() << ")\n";
        out << (fast == brute.dims ? "AGREE" : "DISAGREE") << "\n";
        return fast == brute.dims ? kOk : kFailure;
      }
      out << "sr:      " << join(sr) << "\n";
      bool agree = fast == sr && fast == brute.dims;
      out << (agree ? "AGREE" : "DISAGREE") << "\n";
      return agree ? kOk : kFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace facering::cli
