from django.core.checks import Error, register

from heteromotif.conf import registry, settings


def choice_values(name):
    return [value for value, _ in registry[name]["choices"]]


@register()
def check_motif_settings(app_configs, **kwargs):
    issues = []

    if settings.MOTIFS_WORKERS < 1:
        issues.append(
            Error(
                "MOTIFS_WORKERS must be at least 1, got %s" % settings.MOTIFS_WORKERS,
                id="heteromotif.core.E001",
            )
        )
    if settings.MOTIFS_CHUNK_SIZE < 1:
        issues.append(
            Error(
                "MOTIFS_CHUNK_SIZE must be at least 1, got %s"
                % settings.MOTIFS_CHUNK_SIZE,
                id="heteromotif.core.E002",
            )
        )
    max_k_choices = choice_values("MOTIFS_MAX_K")
    if settings.MOTIFS_MAX_K not in max_k_choices:
        issues.append(
            Error(
                "MOTIFS_MAX_K must be one of %s, got %s"
                % (", ".join(map(str, max_k_choices)), settings.MOTIFS_MAX_K),
                id="heteromotif.core.E003",
            )
        )
    return issues


@register()
def check_oracle_settings(app_configs, **kwargs):
    if settings.ORACLE_MAX_NODES < 4:
        return [
            Error(
                "ORACLE_MAX_NODES must be at least 4 to cover 4-node graphlets, "
                "got %s" % settings.ORACLE_MAX_NODES,
                id="heteromotif.core.E004",
            )
        ]
    return []


@register()
def check_setting_types(app_configs, **kwargs):
    """
    Every registered setting given in the project must have the type
    of its default.
    """
    issues = []
    for name, setting in registry.items():
        if setting["default"] is None:
            continue
        value = getattr(settings, name)
        expected = setting["type"]
        # bool is an int subclass, so it's matched exactly.
        if type(value) is bool and expected is not bool:
            matches = False
        else:
            matches = isinstance(value, expected)
        if not matches:
            issues.append(
                Error(
                    "%s (%s) must be of type %s, got %r"
                    % (setting["label"], name, expected.__name__, value),
                    id="heteromotif.core.E005",
                )
            )
    return issues
