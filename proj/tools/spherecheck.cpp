#include "spherecheck/enumerate.hpp"
#include "spherecheck/homology.hpp"
#include "spherecheck/recognizer.hpp"
#include "spherecheck/skeleton.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spherecheck;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Triangulation load(const std::string& path) {
    try {
        return Triangulation::parse(slurp(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const TriangulationError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

std::string surface_line(const SurfaceVector& v) {
    return v.almost ? format_almost(*v.almost) + " : " + format_coords(v) : format_coords(v);
}

int info(const std::string& file) {
    auto t = load(file);
    Skeleton s(t);
    std::cout << "tetrahedra " << t.size() << '\n';
    std::cout << "components " << t.components().size() << '\n';
    std::cout << "closed " << (t.is_closed() ? "yes" : "no") << '\n';
    std::cout << "vertices " << s.vertices().size() << " edges " << s.edges().size() << " faces " << s.faces().size()
              << '\n';
    for (size_t i = 0; i < s.vertices().size(); ++i) {
        const auto& l = s.vertices()[i].link;
        const char* kind = l.kind == LinkKind::Sphere ? "sphere" : l.kind == LinkKind::Disk ? "disk" : "other";
        std::cout << "vertex " << i << " link " << kind << " euler " << l.euler << '\n';
    }
    const bool manifold = is_three_manifold(s);
    std::cout << "manifold " << (manifold ? "yes" : "no") << '\n';
    if (t.is_closed() && manifold && !t.empty()) {
        std::cout << "homology " << describe(homology(t)) << '\n';
        std::cout << "homology sphere " << (is_homology_sphere(t) ? "yes" : "no") << '\n';
    } else if (!t.is_closed()) {
        auto b = boundary_summary(t);
        std::cout << "boundary faces " << b.faces << " euler " << b.euler << " components " << b.components << '\n';
    }
    return 0;
}

int recognize_cmd(const std::string& file, const std::string& cert_out, bool trace) {
    auto t = load(file);
    auto r = recognize(t, trace);
    for (const auto& line : r.trace) std::cout << "trace " << line << '\n';
    switch (r.answer) {
    case Answer::Sphere:
        std::cout << "sphere (" << r.certificate->steps.size() << (r.certificate->steps.size() == 1 ? " step)\n" : " steps)\n");
        if (!cert_out.empty()) write_file(cert_out, r.certificate->serialize());
        return 0;
    case Answer::NotSphere:
        std::cout << "not sphere: " << r.reason << '\n';
        return 1;
    case Answer::NotApplicable:
        break;
    }
    std::cout << "not applicable: " << r.reason << '\n';
    return 1;
}

int certify_cmd(const std::string& file, const std::string& out) {
    auto t = load(file);
    std::optional<Certificate> c;
    CertifyLog log;
    try {
        c = certify(t, &log);
    } catch (const std::invalid_argument& e) {
        std::cout << "no certificate: " << e.what() << '\n';
        return 1;
    }
    if (!c) {
        std::cout << "no certificate: " << log.failure << '\n';
        return 1;
    }
    write_file(out, c->serialize());
    std::cout << "certificate with " << c->steps.size() << " steps written to " << out << '\n';
    return 0;
}

int verify_cmd(const std::string& file, const std::string& cert_file, size_t max_bits) {
    auto t = load(file);
    Certificate c;
    try {
        c = Certificate::parse(slurp(cert_file));
    } catch (const ParseError& e) {
        throw UsageError(cert_file + ": " + e.what());
    }
    VerifyOptions o;
    o.max_bits = max_bits;
    auto r = verify(t, c, o);
    if (r.accepted) {
        std::cout << "accept\n";
        return 0;
    }
    std::cout << "reject: " << r.reason << '\n';
    return 1;
}

int enumerate_cmd(const std::string& file, bool almost, long limit) {
    auto t = load(file);
    std::vector<SurfaceVector> out;
    try {
        out = almost ? almost_sphere_candidates(t) : normal_vertex_surfaces(t);
    } catch (const TriangulationError& e) {
        throw UsageError(file + ": " + e.what());
    }
    long n = 0;
    for (const auto& v : out) {
        if (limit >= 0 && n++ >= limit) break;
        std::cout << surface_line(v) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide whether a triangulated 3-manifold is the 3-sphere."};
    app.require_subcommand(1);

    std::string file, cert, out;
    bool trace = false, almost = false;
    long limit = -1;
    size_t max_bits = VerifyOptions{}.max_bits;

    auto* info_cmd = app.add_subcommand("info", "Validity, manifold check and homology");
    info_cmd->add_option("FILE", file, "Triangulation (.tri)")->required();

    auto* rec = app.add_subcommand("recognize", "Answer whether the triangulation is S^3");
    rec->add_option("FILE", file, "Triangulation (.tri)")->required();
    rec->add_option("--cert", cert, "Write the certificate here");
    rec->add_flag("--trace", trace, "Print the certification and normalization steps");

    auto* cer = app.add_subcommand("certify", "Produce a certificate");
    cer->add_option("FILE", file, "Triangulation (.tri)")->required();
    cer->add_option("-o,--output", out, "Certificate path")->required();

    auto* ver = app.add_subcommand("verify", "Check a certificate");
    ver->add_option("FILE", file, "Triangulation (.tri)")->required();
    ver->add_option("CERT", cert, "Certificate (.cert)")->required();
    ver->add_option("--max-bits", max_bits, "Largest coordinate bit length accepted");

    auto* en = app.add_subcommand("enumerate", "List admissible vertex solutions");
    en->add_option("FILE", file, "Triangulation (.tri)")->required();
    en->add_flag("--almost", almost, "List almost normal 2-sphere candidates instead");
    en->add_option("--limit", limit, "Print at most N lines")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*info_cmd) return info(file);
        if (*rec) return recognize_cmd(file, cert, trace);
        if (*cer) return certify_cmd(file, out);
        if (*ver) return verify_cmd(file, cert, max_bits);
        if (*en) return enumerate_cmd(file, almost, limit);
    } catch (const UsageError& e) {
        std::cerr << "spherecheck: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
