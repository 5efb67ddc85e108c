#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "qcentre/commands.hpp"

using namespace qcentre;

namespace {

void add_type_options(CLI::App* cmd, JobConfig& cfg)
{
    cmd->add_option("--type", cfg.type, "Cartan type, e.g. A2, or a letter used with --rank")->required();
    cmd->add_option("--rank", cfg.rank, "rank when --type is a bare letter");
}

int emit(const CommandResult& r, const std::string& out)
{
    if (!r.error.empty()) std::cerr << "qcentre: " << r.error << "\n";
    if (r.document.is_null()) return r.exit_code;
    const std::string text = r.document.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "qcentre: cannot write " << out << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Central elements of quantum groups and their Harish-Chandra images"};
    app.require_subcommand(1);
    JobConfig cfg;

    auto* central = app.add_subcommand("central", "build C_lambda^(m) and check it on a battery");
    add_type_options(central, cfg);
    central->add_option("--weight", cfg.weight, "highest weight in fundamental coordinates, e.g. 1,0")->required();
    central->add_option("--power", cfg.power, "power m of Gamma");
    central->add_option("--reduced-word", cfg.reduced_word, "reduced word for w0, e.g. 1,2,1");
    central->add_option("--battery", cfg.battery, "battery preset");
    central->add_option("--out", cfg.out, "output file");

    auto* verify = app.add_subcommand("verify", "run centrality, HC and eigenvalue checks on an element file");
    verify->add_option("--in", cfg.input, "element file")->required();
    verify->add_option("--battery", cfg.battery, "battery preset");
    verify->add_option("--out", cfg.out, "output file");

    auto* hc = app.add_subcommand("hc", "Harish-Chandra image of an element file");
    hc->add_option("--in", cfg.input, "element file")->required();
    hc->add_option("--out", cfg.out, "output file");

    auto* decompose = app.add_subcommand("decompose", "polynomial in the fundamental characters");
    decompose->add_option("--in", cfg.input, "element or hc_image file")->required();
    decompose->add_option("--out", cfg.out, "output file");

    auto* module = app.add_subcommand("module", "simple module V(lambda)");
    add_type_options(module, cfg);
    module->add_option("--weight", cfg.weight, "highest weight")->required();
    module->add_option("--out", cfg.out, "output file");

    auto* pairing = app.add_subcommand("pairing", "pairing (x, y) of x in U<=0 and y in U>=0");
    add_type_options(pairing, cfg);
    pairing->add_option("--x", cfg.x, "element JSON or file")->required();
    pairing->add_option("--y", cfg.y, "element JSON or file")->required();
    pairing->add_option("--out", cfg.out, "output file");

    auto* gram = app.add_subcommand("gram", "Gram matrices of PBW monomials");
    add_type_options(gram, cfg);
    gram->add_option("--weight", cfg.weight, "weight in root coordinates; default: all up to --max-height");
    gram->add_option("--max-height", cfg.max_height, "height bound");
    gram->add_option("--reduced-word", cfg.reduced_word, "reduced word for w0");
    gram->add_option("--out", cfg.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    CommandResult r;
    if (*central) r = cmd_central(cfg);
    else if (*verify) r = cmd_verify(cfg);
    else if (*hc) r = cmd_hc(cfg);
    else if (*decompose) r = cmd_decompose(cfg);
    else if (*module) r = cmd_module(cfg);
    else if (*pairing) r = cmd_pairing(cfg);
    else if (*gram) r = cmd_gram(cfg);
    return emit(r, cfg.out);
}
