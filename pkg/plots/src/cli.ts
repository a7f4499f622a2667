#!/usr/bin/env node
/**
 * plot <kind> --in <csv> --out <svg> [--fits <csv>]
 *
 * kinds: eta | convergence | domain | contour
 * Convergence plots require --fits (the fitted slopes are read, not
 * recomputed); domain plots use --fits when given.
 */

import { readFileSync, writeFileSync } from 'node:fs'
import yargs from 'yargs'
import { hideBin } from 'yargs/helpers'
import { PlotKind, render } from './render.js'

export function main(argv: string[]): number {
  const args = yargs(argv)
    .command('$0 <kind>', 'render a CSV artifact as SVG', (cmd) =>
      cmd.positional('kind', {
        choices: ['eta', 'convergence', 'domain', 'contour'] as const,
        demandOption: true,
      }))
    .option('in', { type: 'string', demandOption: true, describe: 'input CSV' })
    .option('out', { type: 'string', demandOption: true, describe: 'output SVG' })
    .option('fits', { type: 'string', describe: 'fits CSV (convergence/domain)' })
    .strict()
    .parseSync()

  try {
    const svg = render({
      kind: args.kind as PlotKind,
      data: readFileSync(args.in, 'utf8'),
      fits: args.fits === undefined ? undefined : readFileSync(args.fits, 'utf8'),
    })
    writeFileSync(args.out, svg)
    console.log(`wrote ${args.out}`)
    return 0
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`)
    return 1
  }
}

process.exitCode = main(hideBin(process.argv))
