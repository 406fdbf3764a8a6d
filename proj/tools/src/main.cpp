#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "commands.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("UBKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric UBKIT_SEED\n";
        }
    }
    return 0;
}

void add_seesaw_flags(CLI::App* cmd, ubkit::SeesawOptions& opts) {
    cmd->add_option("--seed", opts.seed, "Random seed (default: UBKIT_SEED or 0)");
    cmd->add_option("--restarts", opts.restarts, "Seesaw restarts");
    cmd->add_option("--tol", opts.membership_tol, "Membership/orthogonality tolerance");
    cmd->add_option("--overlap-threshold", opts.overlap_threshold,
                    "Smallest overlap counted as nonzero");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ubkit::cli;

    CLI::App app{"ubkit: unextendible bases and unambiguous LOCC discrimination toolkit"};
    app.require_subcommand(1);

    ConstructArgs construct;
    CertifyArgs certify;
    ReciprocalArgs reciprocal;
    DemoArgs demo;
    certify.opts.seed = reciprocal.opts.seed = demo.opts.seed = default_seed();

    auto* construct_cmd = app.add_subcommand("construct", "Build a named state family");
    construct_cmd
        ->add_option("family", construct.family,
                     "minimal-gupb | theorem2-basis | cross-set | fourier-pairs | ghz-triple | "
                     "example2 | max-entangled")
        ->required();
    construct_cmd->add_option("--shape", construct.shape, "Local dimensions, e.g. 2,2");
    construct_cmd->add_option("--indices", construct.indices,
                              "Index tuples for minimal-gupb, e.g. 0,0;1,1;inf,inf");
    construct_cmd->add_option("--points", construct.points,
                              "Points for theorem2-basis, e.g. 1,2,3,4");
    construct_cmd->add_option("--k", construct.parties, "Party count for ghz-triple");
    construct_cmd->add_option("--x", construct.bits, "Bitstring for ghz-triple");
    construct_cmd->add_option("--d", construct.d,
                              "Local dimension for cross-set / fourier-pairs / max-entangled");
    construct_cmd->add_option("--m", construct.m, "Shift index for max-entangled");
    construct_cmd->add_option("--n", construct.n, "Phase index for max-entangled");
    construct_cmd->add_option("--output", construct.output, "Write the document here");

    auto* certify_cmd = app.add_subcommand("certify", "Certify a state-set document");
    certify_cmd
        ->add_option("mode", certify.mode, "gub | locc-unambiguous | extendible | verify-only")
        ->required();
    certify_cmd->add_option("input", certify.input, "StateSetDocument (or report) JSON file")
        ->required();
    add_seesaw_flags(certify_cmd, certify.opts);
    certify_cmd->add_option("--output", certify.output, "Write the report here");

    auto* reciprocal_cmd =
        app.add_subcommand("reciprocal", "Compute the reciprocal basis and its analysis");
    reciprocal_cmd->add_option("input", reciprocal.input, "StateSetDocument JSON file")
        ->required();
    add_seesaw_flags(reciprocal_cmd, reciprocal.opts);
    reciprocal_cmd->add_option("--output", reciprocal.output, "Write the document here");

    auto* demo_cmd = app.add_subcommand("demo", "Scripted end-to-end scenarios");
    demo_cmd->add_option("name", demo.name, "example1 | example2 | theorem2 | ghz | maxent")
        ->required();
    demo_cmd->add_option("--shape", demo.shape, "Shape for example1/theorem2");
    demo_cmd->add_option("--k", demo.parties, "Party count for ghz");
    demo_cmd->add_option("--x", demo.bits, "Bitstring for ghz");
    demo_cmd->add_option("--d", demo.d, "Local dimension for maxent");
    add_seesaw_flags(demo_cmd, demo.opts);
    demo_cmd->add_option("--output", demo.output, "Write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (construct_cmd->parsed()) return cmd_construct(construct);
        if (certify_cmd->parsed()) return cmd_certify(certify);
        if (reciprocal_cmd->parsed()) return cmd_reciprocal(reciprocal);
        if (demo_cmd->parsed()) return cmd_demo(demo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
