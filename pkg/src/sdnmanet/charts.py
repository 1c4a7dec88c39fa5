"""Self-contained SVG line charts: polylines, labeled axes, inline legend.

No external assets or plotting libraries; coordinates are formatted to a
fixed precision so chart bytes are reproducible.
"""

from __future__ import annotations

WIDTH = 720
HEIGHT = 440
MARGIN_LEFT = 70
MARGIN_RIGHT = 24
MARGIN_TOP = 40
MARGIN_BOTTOM = 54

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(value: float) -> str:
    return format(value, ".6g")


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
    )


def line_chart(
    title: str,
    x_label: str,
    y_label: str,
    series: list[tuple[str, list[tuple[float, float]]]],
) -> str:
    """Render named (x, y) series as one SVG document string."""
    xs = [x for _, points in series for x, _ in points]
    ys = [y for _, points in series for _, y in points]
    x_min, x_max = (min(xs), max(xs)) if xs else (0.0, 1.0)
    y_min, y_max = (min(ys), max(ys)) if ys else (0.0, 1.0)
    if y_min > 0.0:
        y_min = 0.0  # anchor magnitude axes at zero
    x_span = x_max - x_min or 1.0
    y_span = y_max - y_min or 1.0

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x: float) -> float:
        return MARGIN_LEFT + (x - x_min) / x_span * plot_w

    def py(y: float) -> float:
        return HEIGHT - MARGIN_BOTTOM - (y - y_min) / y_span * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{_esc(title)}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="15" '
        f'font-family="sans-serif">{_esc(title)}</text>',
        # axes
        f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
        f'y2="{HEIGHT - MARGIN_BOTTOM}" stroke="#333" stroke-width="1"/>',
        f'<line x1="{MARGIN_LEFT}" y1="{HEIGHT - MARGIN_BOTTOM}" x2="{WIDTH - MARGIN_RIGHT}" '
        f'y2="{HEIGHT - MARGIN_BOTTOM}" stroke="#333" stroke-width="1"/>',
        f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 14}" text-anchor="middle" '
        f'font-size="12" font-family="sans-serif">{_esc(x_label)}</text>',
        f'<text x="18" y="{MARGIN_TOP + plot_h / 2:.1f}" text-anchor="middle" font-size="12" '
        f'font-family="sans-serif" transform="rotate(-90 18 {MARGIN_TOP + plot_h / 2:.1f})">'
        f"{_esc(y_label)}</text>",
    ]

    ticks = 5
    for i in range(ticks + 1):
        xv = x_min + x_span * i / ticks
        xp = px(xv)
        parts.append(
            f'<line x1="{xp:.2f}" y1="{HEIGHT - MARGIN_BOTTOM}" x2="{xp:.2f}" '
            f'y2="{HEIGHT - MARGIN_BOTTOM + 5}" stroke="#333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{xp:.2f}" y="{HEIGHT - MARGIN_BOTTOM + 18}" text-anchor="middle" '
            f'font-size="11" font-family="sans-serif">{_fmt(xv)}</text>'
        )
        yv = y_min + y_span * i / ticks
        yp = py(yv)
        parts.append(
            f'<line x1="{MARGIN_LEFT - 5}" y1="{yp:.2f}" x2="{MARGIN_LEFT}" y2="{yp:.2f}" '
            f'stroke="#333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{yp + 4:.2f}" text-anchor="end" font-size="11" '
            f'font-family="sans-serif">{_fmt(yv)}</text>'
        )

    for idx, (name, points) in enumerate(series):
        color = PALETTE[idx % len(PALETTE)]
        coords = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in points)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        legend_y = MARGIN_TOP + 8 + idx * 18
        legend_x = WIDTH - MARGIN_RIGHT - 150
        parts.append(
            f'<line x1="{legend_x}" y1="{legend_y}" x2="{legend_x + 22}" y2="{legend_y}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{legend_x + 28}" y="{legend_y + 4}" font-size="12" '
            f'font-family="sans-serif">{_esc(name)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
