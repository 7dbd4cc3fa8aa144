__version__ = "0.3.0"

from .commands import COMMANDS  # noqa: E402
from .writers import WRITERS  # noqa: E402


def setup(app):
    for command in COMMANDS:
        app.add_command(command)
    for writer in WRITERS:
        app.add_writer(writer)
    app.add_config_value("solvcoh_cyclotomic_order", 24)
    app.add_config_value("solvcoh_model_cap", 7)
    app.add_config_value("solvcoh_seed", 0)
    app.add_config_value("solvcoh_format", "json")
    app.add_config_value("solvcoh_massey_max_degree", 2)
    app.add_config_value("solvcoh_symplectic_samples", 8)
    app.add_config_value("solvcoh_skip_model", False)
    app.add_config_value("solvcoh_full_modification", False)
    app.add_config_value("solvcoh_quiet", False)
    app.add_config_value("solvcoh_options", None)

    return {
        "version": __version__,
        "commands": [command.name for command in COMMANDS],
        "formats": [writer.format for writer in WRITERS],
    }
