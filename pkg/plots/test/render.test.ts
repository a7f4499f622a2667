import { execFileSync } from 'node:child_process'
import { mkdtempSync, readFileSync, writeFileSync } from 'node:fs'
import { tmpdir } from 'node:os'
import { join } from 'node:path'
import { describe, expect, it } from 'vitest'

import { SCHEMAS, parseTable } from '../src/csv.js'
import { PlotKind, divergingColor, render } from '../src/render.js'

const FIXTURES = join(__dirname, 'fixtures')

function fixture(name: string): string {
  return readFileSync(join(FIXTURES, name), 'utf8')
}

const JOBS: Array<{ kind: PlotKind; data: string; fits?: string }> = [
  { kind: 'eta', data: 'eta_sweep.csv' },
  { kind: 'convergence', data: 'convergence.csv', fits: 'convergence_fits.csv' },
  { kind: 'domain', data: 'domain_study.csv', fits: 'domain_fit.csv' },
  { kind: 'contour', data: 'mode1.csv' },
]

describe('render', () => {
  it.each(JOBS)('renders the $kind kind from fixtures', ({ kind, data, fits }) => {
    const svg = render({ kind, data: fixture(data), fits: fits && fixture(fits) })
    expect(svg.startsWith('<svg')).toBe(true)
    expect(svg.trimEnd().endsWith('</svg>')).toBe(true)
    expect(svg.length).toBeGreaterThan(500)
  })

  it.each(JOBS)('re-rendering $kind is byte-identical', ({ kind, data, fits }) => {
    const job = { kind, data: fixture(data), fits: fits && fixture(fits) }
    expect(render(job)).toBe(render(job))
  })

  it('annotates convergence slopes from the fits CSV within 0.01', () => {
    const svg = render({
      kind: 'convergence',
      data: fixture('convergence.csv'),
      fits: fixture('convergence_fits.csv'),
    })
    const annotated = [...svg.matchAll(/slope (-?\d+\.\d+)/g)].map((m) => Number(m[1]))
    const fits = parseTable(fixture('convergence_fits.csv'), SCHEMAS.convergenceFits)
    expect(annotated).toHaveLength(fits.rows.length)
    const expected = fits.rows.map((r) => r[2]).sort((a, b) => a - b)
    annotated.sort((a, b) => a - b)
    annotated.forEach((slope, i) => {
      expect(Math.abs(slope - expected[i])).toBeLessThanOrEqual(0.01)
    })
  })

  it('marks the sweep minimum', () => {
    const svg = render({ kind: 'eta', data: fixture('eta_sweep.csv') })
    expect(svg).toContain('min at eta=0.08333')
  })

  it('requires the fits CSV for convergence plots', () => {
    expect(() => render({ kind: 'convergence', data: fixture('convergence.csv') }))
      .toThrow(/fits/)
  })

  it('uses a color scale symmetric about zero', () => {
    expect(divergingColor(0)).toBe('rgb(255,255,255)')
    const positive = divergingColor(1).match(/\d+/g)!.map(Number)
    const negative = divergingColor(-1).match(/\d+/g)!.map(Number)
    expect(positive[1]).toBeLessThan(128) // saturated, not washed out
    expect(negative[1]).toBeLessThan(128 + 80)
    expect(divergingColor(0.5)).toBe(divergingColor(0.5))
  })
})

describe('schema validation', () => {
  it('rejects headers that deviate from the schema', () => {
    const bad = fixture('eta_sweep.csv').replace('eta,err1,err2', 'eta,e1,e2')
    expect(() => render({ kind: 'eta', data: bad })).toThrow(/header|column/)
    const reordered = fixture('domain_study.csv').replace('x_eps,h,err1', 'h,x_eps,err1')
    expect(() => render({ kind: 'domain', data: reordered })).toThrow(/header/)
  })

  it('rejects empty data and ragged rows', () => {
    expect(() => render({ kind: 'eta', data: 'eta,err1\n' })).toThrow(/no data/)
    expect(() => render({ kind: 'eta', data: '' })).toThrow(/empty/)
    expect(() => render({ kind: 'eta', data: 'eta,err1\n0.1\n' })).toThrow(/cells/)
    expect(() => render({ kind: 'eta', data: 'eta,err1\n0.1,abc\n' })).toThrow(/parse/)
  })

  it('rejects incomplete contour grids', () => {
    const rows = fixture('mode1.csv').trimEnd().split('\n')
    expect(() => render({ kind: 'contour', data: rows.slice(0, -1).join('\n') }))
      .toThrow(/grid/)
  })
})

describe('cli', () => {
  it('renders through the built binary and is deterministic on disk', () => {
    const dir = mkdtempSync(join(tmpdir(), 'plots-'))
    const out1 = join(dir, 'a.svg')
    const out2 = join(dir, 'b.svg')
    const cli = join(__dirname, '..', 'dist', 'cli.js')
    for (const out of [out1, out2]) {
      execFileSync('node', [cli, 'convergence', '--in', join(FIXTURES, 'convergence.csv'),
        '--fits', join(FIXTURES, 'convergence_fits.csv'), '--out', out])
    }
    expect(readFileSync(out1)).toEqual(readFileSync(out2))
  })

  it('fails with a message on schema mismatch', () => {
    const dir = mkdtempSync(join(tmpdir(), 'plots-'))
    const bad = join(dir, 'bad.csv')
    writeFileSync(bad, 'wrong,header\n1,2\n')
    const cli = join(__dirname, '..', 'dist', 'cli.js')
    expect(() => execFileSync('node', [cli, 'eta', '--in', bad, '--out', join(dir, 'x.svg')],
      { stdio: 'pipe' })).toThrow()
  })
})
