#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "mgcf/datagen.hpp"
#include "mgcf/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Write the bundled synthetic UCR-format fixtures"};
    std::string out_dir = "data";
    app.add_option("--out-dir", out_dir, "Directory for the generated files")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        for (const mgcf::SynthSpec& spec : mgcf::ucr_standin_specs()) {
            const auto [train, test] = mgcf::write_synthetic_ucr(spec, out_dir);
            std::fprintf(stderr, "wrote %s (%zu series of length %zu)\n",
                         train.c_str(), spec.n_train, spec.length);
            std::fprintf(stderr, "wrote %s (%zu series of length %zu)\n",
                         test.c_str(), spec.n_test, spec.length);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const mgcf::InternalError& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    } catch (const mgcf::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 0;
}
