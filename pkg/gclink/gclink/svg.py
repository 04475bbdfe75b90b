#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Minimal SVG text builder """
# ---------------------------------------------------------------------------


class SVG:
    """Accumulates SVG markup; numbers are written with fixed precision"""

    def __init__(self):
        self.svg = ''

    def header(self, width: int, height: int) -> None:
        self.svg += (
            '<?xml version="1.0" standalone="no"?>\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n'
        )

    def group_start(self, attr: dict) -> None:
        g_attr = [f'{key}="{value}"' for key, value in attr.items() if key != 'title']
        self.svg += f'<g {" ".join(g_attr)}>\n'
        if 'title' in attr:
            self.svg += f'<title>{attr["title"]}</title>\n'

    def group_end(self) -> None:
        self.svg += '</g>\n'

    def circle(self, cx: float, cy: float, r: float, extra: str = '') -> None:
        self.svg += f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r:.2f}" {extra}/>\n'

    def polyline(self, points, extra: str = '') -> None:
        coords = ' '.join(f'{x:.2f},{y:.2f}' for x, y in points)
        self.svg += f'<polyline points="{coords}" {extra}/>\n'

    def get_svg(self) -> str:
        return f'{self.svg}</svg>\n'
